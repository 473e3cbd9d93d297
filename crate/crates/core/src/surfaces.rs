//! Seifert matrices of the canonical fiber surfaces of positive braid closures
//! and of arborescent Hopf plumbings.
//!
//! The H₁ basis of a braid surface is given by bricks: one for each pair of
//! consecutive occurrences of a generator. Brick pairings:
//!
//! * `V[b][b] = -1`;
//! * consecutive bricks `x = (i; a, b)`, `y = (i; b, c)` in one column:
//!   `V[x][y] = 1`, `V[y][x] = 0`;
//! * interleaved bricks `x` in column `i` and `y` in column `i + 1`:
//!   `V[x][y] = +1` if `x` starts above `y`, `-1` if `y` starts above `x`,
//!   and `V[y][x] = 0` either way;
//! * everything else 0 (nested or disjoint pairs do not meet).

use serde::Serialize;

use crate::braid::PositiveBraidWord;
use crate::tree::PlaneTree;

/// An H₁ generator of a braid fiber surface: column `i` between the
/// occurrences of `σ_i` at 1-based positions `top < bottom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Brick {
    pub column: usize,
    pub top: usize,
    pub bottom: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    components: usize,
    euler: i64,
}

impl SeifertMatrix {
    pub(crate) fn new(entries: Vec<Vec<i64>>, components: usize, euler: i64) -> Self {
        debug_assert_eq!(entries.len() as i64, components as i64 - euler);
        Self {
            entries,
            components,
            euler,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Connected components of the surface.
    pub fn components(&self) -> usize {
        self.components
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    /// First Betti number `c - χ`.
    pub fn b1(&self) -> usize {
        (self.components as i64 - self.euler) as usize
    }

    /// Simultaneous row/column permutation: row `k` of the result is row
    /// `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> SeifertMatrix {
        let entries = perm
            .iter()
            .map(|&r| perm.iter().map(|&c| self.entries[r][c]).collect())
            .collect();
        Self::new(entries, self.components, self.euler)
    }
}

pub fn bricks(word: &PositiveBraidWord) -> Vec<Brick> {
    let mut positions = vec![Vec::new(); word.strands()];
    for (k, &l) in word.letters().iter().enumerate() {
        positions[l].push(k + 1);
    }
    let mut out = Vec::new();
    for (column, ps) in positions.iter().enumerate() {
        for pair in ps.windows(2) {
            out.push(Brick {
                column,
                top: pair[0],
                bottom: pair[1],
            });
        }
    }
    out
}

fn interleaved(x: &Brick, y: &Brick) -> bool {
    (x.top < y.top && y.top < x.bottom && x.bottom < y.bottom)
        || (y.top < x.top && x.top < y.bottom && y.bottom < x.bottom)
}

/// Surface components of the canonical braid surface: one plus the number
/// of missing generators (the empty word gives `n` disks).
fn braid_surface_components(word: &PositiveBraidWord) -> usize {
    1 + word.missing_generators().len()
}

pub fn seifert_from_braid(word: &PositiveBraidWord) -> SeifertMatrix {
    let bs = bricks(word);
    let dim = bs.len();
    let mut v = vec![vec![0i64; dim]; dim];
    for (a, x) in bs.iter().enumerate() {
        v[a][a] = -1;
        for (b, y) in bs.iter().enumerate() {
            if a == b {
                continue;
            }
            if x.column == y.column && x.bottom == y.top {
                v[a][b] = 1;
            } else if y.column == x.column + 1 && interleaved(x, y) {
                v[a][b] = if x.top < y.top { 1 } else { -1 };
            }
        }
    }
    let euler = word.strands() as i64 - word.len() as i64;
    SeifertMatrix::new(v, braid_surface_components(word), euler)
}

/// Hopf bands at the vertices of `tree`, plumbed along its edges.
pub fn seifert_from_tree(tree: &PlaneTree) -> SeifertMatrix {
    let m = tree.len();
    let mut v = vec![vec![0i64; m]; m];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = -1;
    }
    for (u, c) in tree.edges() {
        v[u][c] = 1;
    }
    SeifertMatrix::new(v, 1, 1 - m as i64)
}

/// `(b₁, components)` of the canonical surface of `word`.
pub fn betti_data(word: &PositiveBraidWord) -> (usize, usize) {
    let components = braid_surface_components(word);
    let b1 = word.len() + components - word.strands();
    (b1, components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[usize]) -> PositiveBraidWord {
        PositiveBraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn brick(column: usize, top: usize, bottom: usize) -> Brick {
        Brick {
            column,
            top,
            bottom,
        }
    }

    #[test]
    fn brick_examples() {
        assert_eq!(bricks(&w(2, &[1, 1])), vec![brick(1, 1, 2)]);
        assert_eq!(
            bricks(&w(3, &[1, 2, 1, 2])),
            vec![brick(1, 1, 3), brick(2, 2, 4)]
        );
        assert_eq!(
            bricks(&w(2, &[1, 1, 1])),
            vec![brick(1, 1, 2), brick(1, 2, 3)]
        );
    }

    #[test]
    fn braid_matrix_examples() {
        let hopf = seifert_from_braid(&w(2, &[1, 1]));
        assert_eq!(hopf.entries(), &[vec![-1]]);
        assert_eq!((hopf.components(), hopf.euler()), (1, 0));

        let trefoil = seifert_from_braid(&w(2, &[1, 1, 1]));
        assert_eq!(trefoil.entries(), &[vec![-1, 1], vec![0, -1]]);

        // bricks: x1=(1;1,3) x2=(1;3,5) y1=(2;2,4) y2=(2;4,6)
        let t33 = seifert_from_braid(&PositiveBraidWord::torus(3, 3).unwrap());
        assert_eq!(
            t33.entries(),
            &[
                vec![-1, 1, 1, 0],
                vec![0, -1, -1, 1],
                vec![0, 0, -1, 1],
                vec![0, 0, 0, -1],
            ]
        );
        assert_eq!(t33.b1(), 4);
    }

    #[test]
    fn split_surfaces_stay_block_diagonal() {
        let m = seifert_from_braid(&w(3, &[1, 1]));
        assert_eq!(m.components(), 2);
        assert_eq!(m.euler(), 1);
        assert_eq!(m.dim(), 1);
        let empty = seifert_from_braid(&w(3, &[]));
        assert_eq!((empty.dim(), empty.components(), empty.euler()), (0, 3, 3));
    }

    #[test]
    fn nested_pairs_do_not_pair() {
        // σ1³σ2²: the σ2 brick (4,5) is disjoint from both σ1 bricks
        let m = seifert_from_braid(&w(3, &[1, 1, 1, 2, 2]));
        assert_eq!(m.get(0, 2), 0);
        assert_eq!(m.get(2, 0), 0);
        assert_eq!(m.get(1, 2), 0);
        assert_eq!(m.get(2, 1), 0);
    }

    #[test]
    fn tree_matrix_examples() {
        assert_eq!(
            seifert_from_tree(&PlaneTree::single()).entries(),
            &[vec![-1]]
        );
        let path = seifert_from_tree(&PlaneTree::path(3));
        assert_eq!(
            path.entries(),
            &[vec![-1, 1, 0], vec![0, -1, 1], vec![0, 0, -1]]
        );
        assert_eq!((path.components(), path.euler(), path.b1()), (1, -2, 3));
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_data(&w(2, &[1, 1])), (1, 1));
        assert_eq!(betti_data(&w(3, &[1, 1])), (1, 2));
        assert_eq!(betti_data(&w(3, &[1, 2, 1, 2])), (2, 1));
        for word in PositiveBraidWord::enumerate(4, 6) {
            assert_eq!(betti_data(&word).0, bricks(&word).len());
            assert_eq!(seifert_from_braid(&word).dim(), bricks(&word).len());
        }
    }
}
