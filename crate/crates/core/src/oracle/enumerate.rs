use num_bigint::BigUint;

use super::determinant::matrix_tree_count;
use super::{Dsu, EdgeList};
use crate::error::{Error, Result};

struct Search<'a, F> {
    n: usize,
    edges: &'a [(usize, usize)],
    chosen: Vec<(usize, usize)>,
    visit: F,
    emitted: u64,
}

impl<F: FnMut(&[(usize, usize)])> Search<'_, F> {
    /// Whether `chosen` plus the edges after position `k` still span.
    fn spans_without(&self, k: usize) -> bool {
        let mut dsu = Dsu::new(self.n);
        let mut parts = self.n;
        for &(u, v) in self.chosen.iter().chain(&self.edges[k + 1..]) {
            if dsu.union(u, v) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Edge `k` is either contracted (kept) or deleted. Keeping is allowed
    /// when it closes no cycle; deleting when it is not a bridge.
    fn run(&mut self, k: usize, dsu: &Dsu) {
        if self.chosen.len() == self.n - 1 {
            (self.visit)(&self.chosen);
            self.emitted += 1;
            return;
        }
        if k == self.edges.len() {
            return;
        }
        let (u, v) = self.edges[k];
        let mut with = dsu.clone();
        if with.union(u, v) {
            self.chosen.push((u, v));
            self.run(k + 1, &with);
            self.chosen.pop();
        }
        if self.spans_without(k) {
            self.run(k + 1, dsu);
        }
    }
}

/// Calls `visit` once per spanning tree, in a fixed order determined by the
/// sorted edge list. Refuses, before enumerating, graphs with more than
/// `max_trees` trees. Returns the number of trees visited.
pub fn for_each_spanning_tree(
    graph: &EdgeList,
    max_trees: u64,
    mut visit: impl FnMut(&[(usize, usize)]),
) -> Result<u64> {
    let count = matrix_tree_count(graph);
    if !count.connected {
        return Err(Error::Disconnected);
    }
    if count.count > BigUint::from(max_trees) {
        return Err(Error::TreeLimit {
            count: count.count,
            limit: max_trees,
        });
    }
    let mut edges: Vec<(usize, usize)> = graph
        .edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    edges.sort_unstable();
    let n = graph.vertex_count;
    if n <= 1 {
        visit(&[]);
        return Ok(1);
    }
    let mut search = Search {
        n,
        edges: &edges,
        chosen: Vec::with_capacity(n - 1),
        visit,
        emitted: 0,
    };
    search.run(0, &Dsu::new(n));
    Ok(search.emitted)
}

/// All spanning trees as edge lists.
pub fn enumerate_trees(graph: &EdgeList, max_trees: u64) -> Result<Vec<Vec<(usize, usize)>>> {
    let mut out = Vec::new();
    for_each_spanning_tree(graph, max_trees, |t| out.push(t.to_vec()))?;
    Ok(out)
}
