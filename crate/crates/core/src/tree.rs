//! Rooted plane trees, the combinatorial data of an arborescent Hopf
//! plumbing. Vertices are numbered in depth-first preorder with the root at 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    pub fn single() -> Self {
        Self {
            children: vec![Vec::new()],
        }
    }

    /// Path on `m` vertices, rooted at an end.
    pub fn path(m: usize) -> Self {
        let m = m.max(1);
        let children = (0..m)
            .map(|v| if v + 1 < m { vec![v + 1] } else { Vec::new() })
            .collect();
        Self { children }
    }

    /// A center with `m - 1` leaves.
    pub fn star(m: usize) -> Self {
        let m = m.max(1);
        let mut children = vec![Vec::new(); m];
        children[0] = (1..m).collect();
        Self { children }
    }

    /// Renumbers an arbitrary rooted ordered child map into preorder.
    fn from_child_map(root: usize, map: &[Vec<usize>]) -> Self {
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(map[v].iter().rev());
        }
        let mut index = vec![usize::MAX; map.len()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let children = order
            .iter()
            .map(|&v| map[v].iter().map(|&c| index[c]).collect())
            .collect();
        Self { children }
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.len()];
        for (u, cs) in self.children.iter().enumerate() {
            for &c in cs {
                parent[c] = Some(u);
            }
        }
        parent
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parents()[v]
    }

    /// `(parent, child)` pairs in preorder of the child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .children
            .iter()
            .enumerate()
            .flat_map(|(u, cs)| cs.iter().map(move |&c| (u, c)))
            .collect();
        edges.sort_by_key(|&(_, c)| c);
        edges
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for v in 0..self.len() {
            for &c in &self.children[v] {
                depth[c] = depth[v] + 1;
            }
        }
        depth
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        v < self.len() && self.children[v].is_empty()
    }

    /// The deepest childless non-root vertex, leftmost among ties.
    pub fn deepest_leftmost_leaf(&self) -> Option<usize> {
        let depth = self.depths();
        (1..self.len())
            .filter(|&v| self.is_leaf(v))
            .max_by(|&a, &b| depth[a].cmp(&depth[b]).then(b.cmp(&a)))
    }

    /// The tree with the childless non-root vertex `v` deleted.
    pub fn remove_leaf(&self, v: usize) -> Result<PlaneTree> {
        if v == 0 || !self.is_leaf(v) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not a removable leaf of {self}"
            )));
        }
        let map: Vec<Vec<usize>> = self
            .children
            .iter()
            .map(|cs| cs.iter().copied().filter(|&c| c != v).collect())
            .collect();
        Ok(Self::from_child_map(0, &map))
    }

    /// Components of the forest obtained by deleting leaf `v` and its parent:
    /// the part containing the root (if the parent is not the root) followed
    /// by the subtrees of the parent's other children, left to right.
    pub fn forest_without_leaf_and_parent(&self, v: usize) -> Result<Vec<PlaneTree>> {
        if v == 0 || !self.is_leaf(v) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not a removable leaf of {self}"
            )));
        }
        let w = self.parent(v).expect("non-root vertex has a parent");
        let mut forest = Vec::new();
        if w != 0 {
            let map: Vec<Vec<usize>> = self
                .children
                .iter()
                .map(|cs| cs.iter().copied().filter(|&c| c != w).collect())
                .collect();
            forest.push(Self::from_child_map(0, &map));
        }
        for &c in &self.children[w] {
            if c != v {
                forest.push(Self::from_child_map(c, &self.children));
            }
        }
        Ok(forest)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (u, c) in self.edges() {
            adj[u].push(c);
            adj[c].push(u);
        }
        adj
    }

    /// The same abstract tree rooted at `r`.
    pub fn reroot(&self, r: usize) -> PlaneTree {
        let adj = self.adjacency();
        let mut map = vec![Vec::new(); self.len()];
        let mut seen = vec![false; self.len()];
        let mut stack = vec![r];
        seen[r] = true;
        while let Some(v) = stack.pop() {
            for &x in &adj[v] {
                if !seen[x] {
                    seen[x] = true;
                    map[v].push(x);
                    stack.push(x);
                }
            }
        }
        Self::from_child_map(r, &map)
    }

    /// Mirror image: every child list reversed.
    pub fn mirrored(&self) -> PlaneTree {
        let map: Vec<Vec<usize>> = self
            .children
            .iter()
            .map(|cs| cs.iter().rev().copied().collect())
            .collect();
        Self::from_child_map(0, &map)
    }

    /// Reorders the children of `v` by rotating the list left by `k`.
    pub fn rotate_children(&self, v: usize, k: usize) -> PlaneTree {
        let mut map = self.children.clone();
        if !map[v].is_empty() {
            let len = map[v].len();
            map[v].rotate_left(k % len);
        }
        Self::from_child_map(0, &map)
    }

    /// All rooted plane trees on `m` vertices (there are Catalan(m - 1)).
    pub fn enumerate(m: usize) -> Vec<PlaneTree> {
        enumerate_shapes(m)
            .into_iter()
            .map(|s| s.parse().expect("generated tree text is well formed"))
            .collect()
    }

    /// A key identifying the underlying unrooted, unordered tree: the
    /// lexicographically smallest AHU encoding over the tree's centers.
    pub fn unrooted_key(&self) -> String {
        let adj = self.adjacency();
        centers(&adj)
            .into_iter()
            .map(|c| ahu(&adj, c, usize::MAX))
            .min()
            .unwrap_or_default()
    }
}

fn enumerate_shapes(m: usize) -> Vec<String> {
    if m == 0 {
        return Vec::new();
    }
    // ordered forests on k vertices, as concatenated "(...)" groups
    let mut forests: Vec<Vec<String>> = vec![vec![String::new()]];
    for k in 1..m {
        let mut out = Vec::new();
        for first in 1..=k {
            for head in &forests[first - 1] {
                for tail in &forests[k - first] {
                    out.push(format!("(v{head}){tail}"));
                }
            }
        }
        forests.push(out);
    }
    forests[m - 1].iter().map(|f| format!("v{f}")).collect()
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &x in &adj[v] {
                degree[x] -= 1;
                if degree[x] == 1 {
                    next.push(x);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn ahu(adj: &[Vec<usize>], v: usize, from: usize) -> String {
    let mut parts: Vec<String> = adj[v]
        .iter()
        .filter(|&&x| x != from)
        .map(|&x| ahu(adj, x, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &PlaneTree, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "v")?;
            for &c in &t.children[v] {
                write!(f, "(")?;
                go(t, c, f)?;
                write!(f, ")")?;
            }
            Ok(())
        }
        if self.is_empty() {
            return Ok(());
        }
        go(self, 0, f)
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    /// Parses nested parentheses, one `v` per vertex: `v(v(v))`, `v(v)(v)(v)`.
    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<(usize, u8)> = s
            .bytes()
            .enumerate()
            .filter(|(_, b)| !b.is_ascii_whitespace())
            .collect();
        let mut children: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;

        fn vertex(
            bytes: &[(usize, u8)],
            i: &mut usize,
            children: &mut Vec<Vec<usize>>,
            end: usize,
        ) -> Result<usize> {
            match bytes.get(*i) {
                Some((_, b'v')) => *i += 1,
                Some(&(pos, b)) => {
                    return Err(Error::parse(
                        pos,
                        format!("expected 'v', found '{}'", b as char),
                    ))
                }
                None => return Err(Error::parse(end, "expected 'v'")),
            }
            let id = children.len();
            children.push(Vec::new());
            while let Some((_, b'(')) = bytes.get(*i) {
                *i += 1;
                let c = vertex(bytes, i, children, end)?;
                children[id].push(c);
                match bytes.get(*i) {
                    Some((_, b')')) => *i += 1,
                    Some(&(pos, _)) => return Err(Error::parse(pos, "expected ')'")),
                    None => return Err(Error::parse(end, "expected ')'")),
                }
            }
            Ok(id)
        }

        vertex(&bytes, &mut i, &mut children, s.len())?;
        if let Some(&(pos, _)) = bytes.get(i) {
            return Err(Error::parse(pos, "trailing input after tree"));
        }
        Ok(Self { children })
    }
}

impl Serialize for PlaneTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PlaneTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(t("v(v(v))"), PlaneTree::path(3));
        assert_eq!(t("v(v)(v)(v)"), PlaneTree::star(4));
        assert_eq!(t("v"), PlaneTree::single());
        assert_eq!(t(" v ( v ) ").to_string(), "v(v)");
        assert_eq!(PlaneTree::path(3).to_string(), "v(v(v))");
        match "v(v(x))".parse::<PlaneTree>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("v(v".parse::<PlaneTree>().is_err());
        assert!("v)".parse::<PlaneTree>().is_err());
        assert!("".parse::<PlaneTree>().is_err());
    }

    #[test]
    fn preorder_numbering() {
        let tree = t("v(v(v)(v))(v)");
        assert_eq!(tree.children(0), &[1, 4]);
        assert_eq!(tree.children(1), &[2, 3]);
        assert_eq!(tree.edges(), vec![(0, 1), (1, 2), (1, 3), (0, 4)]);
    }

    #[test]
    fn leaf_choice_is_deepest_then_leftmost() {
        assert_eq!(t("v(v(v)(v))(v)").deepest_leftmost_leaf(), Some(2));
        assert_eq!(PlaneTree::star(4).deepest_leftmost_leaf(), Some(1));
        assert_eq!(PlaneTree::single().deepest_leftmost_leaf(), None);
    }

    #[test]
    fn removing_leaves_and_forests() {
        let tree = t("v(v(v)(v))(v)");
        assert_eq!(tree.remove_leaf(2).unwrap(), t("v(v(v))(v)"));
        assert!(tree.remove_leaf(1).is_err());
        assert!(tree.remove_leaf(0).is_err());
        assert_eq!(
            tree.forest_without_leaf_and_parent(2).unwrap(),
            vec![t("v(v)"), t("v")]
        );
        assert!(PlaneTree::path(2)
            .forest_without_leaf_and_parent(1)
            .unwrap()
            .is_empty());
        assert_eq!(
            PlaneTree::path(3)
                .forest_without_leaf_and_parent(2)
                .unwrap(),
            vec![t("v")]
        );
        assert_eq!(
            PlaneTree::star(4)
                .forest_without_leaf_and_parent(1)
                .unwrap(),
            vec![t("v"), t("v")]
        );
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=8).map(|m| PlaneTree::enumerate(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        for m in 1..=6 {
            for tree in PlaneTree::enumerate(m) {
                assert_eq!(tree.len(), m);
            }
        }
    }

    #[test]
    fn unrooted_key_identifies_abstract_trees() {
        use std::collections::HashSet;
        // numbers of unlabeled free trees on 1..=8 vertices
        let expected = [1, 1, 1, 2, 3, 6, 11, 23];
        for (m, &count) in (1..=8).zip(expected.iter()) {
            let keys: HashSet<String> = PlaneTree::enumerate(m)
                .iter()
                .map(|t| t.unrooted_key())
                .collect();
            assert_eq!(keys.len(), count, "m = {m}");
        }
        let tree = t("v(v(v)(v))(v)");
        for r in 0..tree.len() {
            assert_eq!(tree.reroot(r).unrooted_key(), tree.unrooted_key());
            assert_eq!(tree.reroot(r).len(), tree.len());
        }
        assert_eq!(tree.mirrored(), t("v(v)(v(v)(v))"));
        assert_eq!(tree.rotate_children(0, 1), t("v(v)(v(v)(v))"));
    }
}
