//! Explicit construction of the Hanoi graph `H_n`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::{Peg, PegPermutation, VertexLabel};

/// Default cap on the level of explicitly built graphs (`3^12 = 531441` vertices).
pub const DEFAULT_MAX_LEVEL: u32 = 12;

/// The Hanoi graph `H_n`.
///
/// Vertex `i` is the disc configuration whose base-3 expansion (largest disc
/// first) is `i`, so the three top-level copies occupy contiguous index ranges.
/// Edges are stored once, as `(u, v)` with `label(u) < label(v)`.
#[derive(Clone, Debug)]
pub struct HanoiGraph {
    n: u32,
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

pub fn build_graph(n: u32) -> Result<HanoiGraph> {
    HanoiGraph::build(n)
}

impl HanoiGraph {
    pub fn build(n: u32) -> Result<Self> {
        Self::build_with_limit(n, DEFAULT_MAX_LEVEL)
    }

    pub fn build_with_limit(n: u32, limit: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLevel);
        }
        if n > limit {
            return Err(Error::SizeLimit { n, limit });
        }

        let mut labels: Vec<VertexLabel> = (0..3).map(VertexLabel::outmost).collect();
        let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
        for level in 2..=n {
            let m = labels.len();
            let mut next_labels = Vec::with_capacity(3 * m);
            let mut next_edges = Vec::with_capacity(3 * edges.len() + 3);
            for copy in 0..3 as Peg {
                next_labels.extend(labels.iter().map(|l| l.prefixed(copy)));
                let offset = copy as usize * m;
                next_edges.extend(edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            }
            // Corner `b` of copy `a` is joined to corner `a` of copy `b`.
            let corner = |copy: usize, peg: usize| copy * m + peg * (m - 1) / 2;
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                next_edges.push((corner(a, b), corner(b, a)));
            }
            labels = next_labels;
            edges = next_edges;
            debug_assert_eq!(labels.len(), 3usize.pow(level));
        }

        for e in edges.iter_mut() {
            if labels[e.1] < labels[e.0] {
                *e = (e.1, e.0);
            }
        }
        let mut adjacency = vec![Vec::with_capacity(3); labels.len()];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(HanoiGraph {
            n,
            labels,
            index,
            edges,
            adjacency,
        })
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &VertexLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Like [`vertex`](Self::vertex) but reports a missing label as an error.
    pub fn require_vertex(&self, label: &VertexLabel) -> Result<usize> {
        self.vertex(label).ok_or_else(|| Error::VertexNotInGraph {
            label: label.to_string(),
            n: self.n,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Vertex indices ordered by label.
    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        order
    }

    /// Edges as label pairs, sorted by `(first, second)`.
    pub fn sorted_label_edges(&self) -> Vec<(&VertexLabel, &VertexLabel)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (&self.labels[u], &self.labels[v]))
            .collect();
        out.sort();
        out
    }

    /// Image of the edge set under a digit-wise peg permutation, as sorted
    /// label pairs.
    pub fn permuted_label_edges(&self, sigma: PegPermutation) -> Vec<(VertexLabel, VertexLabel)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let a = self.labels[u].permuted(sigma);
                let b = self.labels[v].permuted(sigma);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    AdjacencyJson,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" => Ok(ExportFormat::EdgeList),
            "adjacency-json" | "json" => Ok(ExportFormat::AdjacencyJson),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct AdjacencyJson<'a> {
    n: u32,
    vertices: Vec<&'a VertexLabel>,
    edges: Vec<[&'a VertexLabel; 2]>,
}

/// Serialises the graph deterministically.
///
/// The edge list is one `label<TAB>label` line per edge (LF terminated),
/// sorted by `(first, second)` with the smaller label first.
pub fn export_edges(graph: &HanoiGraph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::EdgeList => {
            let mut out = String::with_capacity(graph.edge_count() * 12);
            for (a, b) in graph.sorted_label_edges() {
                writeln!(out, "{}\t{}", a, b).unwrap();
            }
            out.into_bytes()
        }
        ExportFormat::AdjacencyJson => {
            let doc = AdjacencyJson {
                n: graph.level(),
                vertices: graph
                    .sorted_vertices()
                    .into_iter()
                    .map(|v| graph.label(v))
                    .collect(),
                edges: graph
                    .sorted_label_edges()
                    .into_iter()
                    .map(|(a, b)| [a, b])
                    .collect(),
            };
            serde_json::to_vec(&doc).expect("labels serialise as strings")
        }
    }
}
