//! Brute-force reference computations on explicit graphs: matrix-tree
//! determinants, weighted determinants interpolated into degree polynomials,
//! and exhaustive spanning-tree enumeration.
//!
//! Everything here works on a plain [`EdgeList`], so it can be checked against
//! complete graphs and cycles without touching the Hanoi construction.

mod determinant;
mod enumerate;
mod poly;

use crate::graph::HanoiGraph;

pub use determinant::{bareiss_determinant, laplacian_minor, matrix_tree_count, TreeCount};
pub use enumerate::{enumerate_trees, for_each_spanning_tree};
pub use poly::{
    degree_poly, degree_poly_at, forest_class_counts, forest_class_degree_polys, DegreePolynomial,
};

/// Undirected multigraph-free edge list on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(
            edges
                .iter()
                .all(|&(u, v)| u < vertex_count && v < vertex_count && u != v),
            "edge endpoints must be distinct vertices"
        );
        EdgeList {
            vertex_count,
            edges,
        }
    }

    pub fn complete(k: usize) -> Self {
        let edges = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .collect();
        EdgeList::new(k, edges)
    }

    pub fn cycle(k: usize) -> Self {
        EdgeList::new(k, (0..k).map(|u| (u, (u + 1) % k)).collect())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for &(u, v) in &self.edges {
            if dsu.union(u, v) {
                parts -= 1;
            }
        }
        parts <= 1
    }
}

impl From<&HanoiGraph> for EdgeList {
    fn from(g: &HanoiGraph) -> Self {
        EdgeList::new(g.vertex_count(), g.edges().to_vec())
    }
}

/// Union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
