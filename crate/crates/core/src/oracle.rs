//! Brute-force enumeration of labeled trees.
//!
//! Every `(n-1)`-subset of the edges of the complete graph on `1..=n` is
//! tested for connectivity. Nothing here uses a counting formula, so the
//! results serve as ground truth for the recurrence and series modules.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::report::{Failure, VerificationReport};

/// Largest `n` the oracle will enumerate; `C(28, 7)` subsets at `n = 8`.
pub const MAX_ORACLE_N: usize = 8;

pub type Edge = (u32, u32);

/// A tree on vertices `1..=n` with its edges sorted lexicographically, each
/// stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledTree {
    n: u32,
    edges: Vec<Edge>,
}

impl LabeledTree {
    /// Validates and canonicalizes an edge list.
    pub fn new(n: u32, edges: &[Edge]) -> Result<Self> {
        if !is_tree(n, edges)? {
            return Err(Error::domain(format!(
                "edges do not form a tree on {n} vertices"
            )));
        }
        let mut edges: Vec<Edge> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, u: u32, v: u32) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Size of the component containing `start` once `removed` is deleted.
    fn component_size_without(&self, removed: Edge, start: u32) -> usize {
        let n = self.n as usize;
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in self.edges.iter().filter(|&&e| e != removed) {
            adj[u as usize].push(v as usize);
            adj[v as usize].push(u as usize);
        }
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::from([start as usize]);
        seen[start as usize] = true;
        let mut size = 0;
        while let Some(x) = queue.pop_front() {
            size += 1;
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        size
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}{v}")?;
        }
        write!(f, "}}")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// True iff `edges` has exactly `n - 1` members and connects `1..=n`.
pub fn is_tree(n: u32, edges: &[Edge]) -> Result<bool> {
    if n == 0 {
        return Err(Error::domain("a tree needs at least one vertex"));
    }
    let mut seen = BTreeSet::new();
    for &(u, v) in edges {
        if u == v {
            return Err(Error::domain(format!("self-loop at vertex {u}")));
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::domain(format!(
                "edge {{{u},{v}}} has an endpoint outside 1..={n}"
            )));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::domain(format!("duplicate edge {{{u},{v}}}")));
        }
    }
    if edges.len() + 1 != n as usize {
        return Ok(false);
    }
    let mut uf = UnionFind::new(n as usize + 1);
    let mut components = n as usize;
    for &(u, v) in edges {
        if uf.union(u as usize, v as usize) {
            components -= 1;
        }
    }
    Ok(components == 1)
}

fn check_limit(n: usize, min: usize) -> Result<()> {
    if n > MAX_ORACLE_N {
        return Err(Error::OracleLimit {
            n,
            max: MAX_ORACLE_N,
        });
    }
    if n < min {
        return Err(Error::domain(format!("oracle needs n >= {min}, got {n}")));
    }
    Ok(())
}

fn complete_graph_edges(n: u32) -> Vec<Edge> {
    (1..=n).tuple_combinations().collect()
}

/// Every labeled tree on `1..=n`, in lexicographic order of edge lists.
pub fn enumerate_labeled_trees(n: usize) -> Result<Vec<LabeledTree>> {
    check_limit(n, 1)?;
    let n32 = n as u32;
    let all = complete_graph_edges(n32);
    let mut trees = Vec::new();
    for subset in all.into_iter().combinations(n - 1) {
        // n - 1 edges without a cycle span all n vertices
        let mut uf = UnionFind::new(n + 1);
        if subset
            .iter()
            .all(|&(u, v)| uf.union(u as usize, v as usize))
        {
            trees.push(LabeledTree {
                n: n32,
                edges: subset,
            });
        }
    }
    Ok(trees)
}

fn check_edge(n: usize, u: u32, v: u32) -> Result<Edge> {
    if u == v {
        return Err(Error::domain(format!("{{{u},{v}}} is a self-loop")));
    }
    let (a, b) = (u.min(v), u.max(v));
    if a == 0 || b as usize > n {
        return Err(Error::domain(format!(
            "edge {{{u},{v}}} is outside 1..={n}"
        )));
    }
    Ok((a, b))
}

/// One enumeration of the trees on `1..=n`, queried several ways.
#[derive(Debug, Clone)]
pub struct Census {
    n: usize,
    trees: Vec<LabeledTree>,
}

impl Census {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            trees: enumerate_labeled_trees(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trees(&self) -> &[LabeledTree] {
        &self.trees
    }

    pub fn tree_count(&self) -> BigUint {
        BigUint::from(self.trees.len())
    }

    /// Number of trees whose edge set contains `{u, v}`.
    pub fn trees_with_edge(&self, u: u32, v: u32) -> Result<BigUint> {
        check_limit(self.n, 2)?;
        let (a, b) = check_edge(self.n, u, v)?;
        Ok(BigUint::from(
            self.trees.iter().filter(|t| t.contains_edge(a, b)).count(),
        ))
    }

    /// Tree counts for each of the `C(n, 2)` edges, in lexicographic edge order.
    pub fn per_edge_counts(&self) -> Result<Vec<(Edge, BigUint)>> {
        check_limit(self.n, 2)?;
        let edges = complete_graph_edges(self.n as u32);
        let mut counts = vec![0u64; edges.len()];
        for tree in &self.trees {
            for (i, e) in edges.iter().enumerate() {
                if tree.edges.binary_search(e).is_ok() {
                    counts[i] += 1;
                }
            }
        }
        Ok(edges
            .into_iter()
            .zip(counts.into_iter().map(BigUint::from))
            .collect())
    }

    /// Checks that every edge lies in the same number of trees. On success
    /// the report's value is that common count.
    pub fn edge_count_uniformity(&self) -> Result<VerificationReport> {
        let counts = self.per_edge_counts()?;
        let n = self.n as u64;
        let identity = "per-edge tree counts are equal";
        let (first_edge, first) = &counts[0];
        for (edge, c) in &counts[1..] {
            if c != first {
                return Ok(VerificationReport::fail(
                    identity,
                    n,
                    n,
                    Failure {
                        index: n,
                        lhs: format!("{{{},{}}}: {first}", first_edge.0, first_edge.1),
                        rhs: format!("{{{},{}}}: {c}", edge.0, edge.1),
                    },
                ));
            }
        }
        Ok(VerificationReport::pass(identity, n, n).with_value(first.to_string()))
    }

    pub fn split_profile(&self) -> Result<SplitProfile> {
        check_limit(self.n, 2)?;
        let anchor = (1, 2);
        let mut counts = vec![0u64; self.n - 1];
        for tree in &self.trees {
            if tree.contains_edge(anchor.0, anchor.1) {
                let k = tree.component_size_without(anchor, 1) - 1;
                counts[k] += 1;
            }
        }
        Ok(SplitProfile {
            n: self.n,
            anchor_edge: anchor,
            counts_by_k: counts.into_iter().map(BigUint::from).collect(),
        })
    }
}

/// Number of trees on `1..=n` whose edge set contains `{u, v}`.
pub fn count_trees_with_edge(n: usize, u: u32, v: u32) -> Result<BigUint> {
    check_limit(n, 2)?;
    check_edge(n, u, v)?;
    Census::new(n)?.trees_with_edge(u, v)
}

pub fn per_edge_counts(n: usize) -> Result<Vec<(Edge, BigUint)>> {
    check_limit(n, 2)?;
    Census::new(n)?.per_edge_counts()
}

pub fn edge_count_uniformity(n: usize) -> Result<VerificationReport> {
    check_limit(n, 2)?;
    Census::new(n)?.edge_count_uniformity()
}

/// For trees containing the anchor edge `{1, 2}`, how many put `k` further
/// vertices on vertex 1's side once the anchor is deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitProfile {
    pub n: usize,
    pub anchor_edge: Edge,
    /// Indexed by `k = 0..=n-2`.
    pub counts_by_k: Vec<BigUint>,
}

impl SplitProfile {
    pub fn total(&self) -> BigUint {
        self.counts_by_k.iter().sum()
    }
}

pub fn split_profile(n: usize) -> Result<SplitProfile> {
    check_limit(n, 2)?;
    Census::new(n)?.split_profile()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn is_tree_examples() {
        assert!(is_tree(3, &[(1, 2), (2, 3)]).unwrap());
        assert!(!is_tree(3, &[(1, 2)]).unwrap());
        assert!(!is_tree(4, &[(1, 2), (2, 3), (1, 3)]).unwrap());
        assert!(is_tree(1, &[]).unwrap());
    }

    #[test]
    fn is_tree_rejects_malformed_edges() {
        assert!(matches!(
            is_tree(3, &[(1, 1), (2, 3)]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            is_tree(3, &[(1, 4), (2, 3)]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            is_tree(3, &[(0, 1), (2, 3)]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            is_tree(3, &[(1, 2), (2, 1)]),
            Err(Error::Domain(_))
        ));
        assert!(is_tree(0, &[]).is_err());
    }

    #[test]
    fn labeled_tree_canonicalizes() {
        let t = LabeledTree::new(4, &[(4, 2), (1, 3), (3, 2)]).unwrap();
        assert_eq!(t.edges(), &[(1, 3), (2, 3), (2, 4)]);
        assert!(LabeledTree::new(3, &[(1, 2)]).is_err());
    }

    #[test]
    fn enumerate_small() {
        let one = enumerate_labeled_trees(1).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].edges().is_empty());

        let three: Vec<String> = enumerate_labeled_trees(3)
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(three, ["{12, 13}", "{12, 23}", "{13, 23}"]);
    }

    #[test]
    fn enumerate_counts_and_ordering() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_labeled_trees(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 3, 16, 125, 1296, 16807]);
        let six = enumerate_labeled_trees(6).unwrap();
        assert!(
            six.windows(2).all(|w| w[0] < w[1]),
            "strictly increasing, hence no duplicates"
        );
        for t in &six {
            assert!(is_tree(6, t.edges()).unwrap());
        }
    }

    #[test]
    fn enumeration_limit() {
        assert_eq!(
            enumerate_labeled_trees(9),
            Err(Error::OracleLimit { n: 9, max: 8 })
        );
        assert!(matches!(enumerate_labeled_trees(0), Err(Error::Domain(_))));
    }

    #[test]
    fn trees_with_edge() {
        assert_eq!(count_trees_with_edge(2, 1, 2).unwrap(), big(1));
        assert_eq!(count_trees_with_edge(3, 1, 2).unwrap(), big(2));
        assert_eq!(count_trees_with_edge(4, 1, 2).unwrap(), big(8));
        assert_eq!(count_trees_with_edge(4, 4, 3).unwrap(), big(8));
        assert!(count_trees_with_edge(4, 2, 2).is_err());
        assert!(count_trees_with_edge(4, 1, 5).is_err());
        assert!(count_trees_with_edge(1, 1, 2).is_err());
    }

    #[test]
    fn uniformity() {
        for (n, common) in [(2, "1"), (3, "2"), (5, "50")] {
            let r = edge_count_uniformity(n).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.value(), Some(common));
        }
    }

    #[test]
    fn split_profiles() {
        let as_u64 = |n| -> Vec<u64> {
            split_profile(n)
                .unwrap()
                .counts_by_k
                .iter()
                .map(|c| c.try_into().unwrap())
                .collect()
        };
        assert_eq!(as_u64(2), [1]);
        assert_eq!(as_u64(3), [1, 1]);
        assert_eq!(as_u64(4), [3, 2, 3]);
        let p = split_profile(4).unwrap();
        assert_eq!(p.anchor_edge, (1, 2));
        assert_eq!(p.total(), big(8));
    }
}
