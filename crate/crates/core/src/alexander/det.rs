//! Exact determinants over the Laurent ring `Z[t^{±1/2}]`.

use std::collections::HashMap;

use crate::laurent::HalfLaurent;

/// Square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    entries: Vec<Vec<HalfLaurent>>,
}

/// Matrices up to this size use memoized cofactor expansion; larger ones use
/// fraction-free elimination.
pub const LAPLACE_MAX_DIM: usize = 12;

impl LaurentMatrix {
    /// Panics if the rows are not all of length `entries.len()`.
    pub fn new(entries: Vec<Vec<HalfLaurent>>) -> Self {
        let n = entries.len();
        assert!(
            entries.iter().all(|r| r.len() == n),
            "LaurentMatrix must be square"
        );
        Self { entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                HalfLaurent::one()
            } else {
                HalfLaurent::zero()
            }
        })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> HalfLaurent) -> Self {
        Self {
            entries: (0..dim)
                .map(|i| (0..dim).map(|j| f(i, j)).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &HalfLaurent {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<HalfLaurent>] {
        &self.entries
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        let n = self.dim();
        Self::from_fn(n, |i, j| {
            (0..n)
                .filter(|&k| !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero())
                .map(|k| &self.entries[i][k] * &other.entries[k][j])
                .sum()
        })
    }

    pub fn sub(&self, other: &LaurentMatrix) -> LaurentMatrix {
        Self::from_fn(self.dim(), |i, j| {
            &self.entries[i][j] - &other.entries[i][j]
        })
    }

    pub fn det(&self) -> HalfLaurent {
        det_laurent(self)
    }
}

pub fn det_laurent(m: &LaurentMatrix) -> HalfLaurent {
    if m.dim() <= LAPLACE_MAX_DIM {
        det_laplace(m)
    } else {
        det_bareiss(m)
    }
}

/// Cofactor expansion along rows, memoized on the set of columns still in
/// play: `minor[mask]` is the determinant of the leading `|mask|` rows
/// restricted to the columns in `mask`.
pub fn det_laplace(m: &LaurentMatrix) -> HalfLaurent {
    let n = m.dim();
    assert!(
        n < usize::BITS as usize,
        "matrix too large for subset expansion"
    );
    let mut memo: HashMap<usize, HalfLaurent> = HashMap::new();
    memo.insert(0, HalfLaurent::one());
    laplace_minor(m, (1usize << n) - 1, &mut memo)
}

fn laplace_minor(
    m: &LaurentMatrix,
    mask: usize,
    memo: &mut HashMap<usize, HalfLaurent>,
) -> HalfLaurent {
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let row = mask.count_ones() as usize - 1;
    let mut acc = HalfLaurent::zero();
    // columns of mask above j decide the cofactor sign
    let mut above = mask.count_ones() as usize;
    for j in 0..m.dim() {
        if mask & (1 << j) == 0 {
            continue;
        }
        above -= 1;
        let entry = &m.entries[row][j];
        if entry.is_zero() {
            continue;
        }
        let minor = laplace_minor(m, mask & !(1 << j), memo);
        if minor.is_zero() {
            continue;
        }
        let term = entry * &minor;
        if above.is_multiple_of(2) {
            acc += &term;
        } else {
            acc += &(-term);
        }
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Fraction-free (Bareiss) elimination; every division is exact in the
/// Laurent ring.
pub fn det_bareiss(m: &LaurentMatrix) -> HalfLaurent {
    let n = m.dim();
    if n == 0 {
        return HalfLaurent::one();
    }
    let mut a = m.entries.clone();
    let mut negate = false;
    let mut prev = HalfLaurent::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return HalfLaurent::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            a[i][k] = HalfLaurent::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
