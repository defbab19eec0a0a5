//! Uniform spanning trees by Wilson's loop-erased random walks, and
//! empirical degree tallies checked against the exact distributions.
//!
//! Reproducibility: a single tree uses `ChaCha8Rng::seed_from_u64(seed)`.
//! A report splits its samples into chunks of [`CHUNK`]; chunk `j` draws from
//! `ChaCha8Rng::seed_from_u64(split_seed(seed, j))`, so the result does not
//! depend on the number of worker threads.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::degree::vertex_distribution;
use crate::error::{Error, Result};
use crate::exact::{approx_f64, serialize_rational};
use crate::graph::HanoiGraph;
use crate::label::VertexLabel;

pub const RNG_NAME: &str = "ChaCha8 (rand_chacha), chunk seeds by SplitMix64";
pub const MIN_SAMPLES: u64 = 1000;
pub const CHUNK: u64 = 4096;
/// Tolerance used by the statistical checks, in standard deviations.
pub const Z_BOUND: f64 = 4.0;

/// SplitMix64 output for counter `chunk + 1` of the stream started at `seed`.
pub fn split_seed(seed: u64, chunk: u64) -> u64 {
    let mut z = seed.wrapping_add((chunk + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Reusable buffers for repeated walks on one graph.
struct Walker<'a> {
    graph: &'a HanoiGraph,
    root: usize,
    in_tree: Vec<bool>,
    next: Vec<usize>,
}

impl<'a> Walker<'a> {
    fn new(graph: &'a HanoiGraph) -> Self {
        let root = graph.vertex(&VertexLabel::outmost(0)).expect("corner 0");
        let n = graph.vertex_count();
        Walker {
            graph,
            root,
            in_tree: vec![false; n],
            next: vec![usize::MAX; n],
        }
    }

    /// After this, `next[u]` is the parent of `u` for every `u != root`.
    fn draw(&mut self, rng: &mut impl Rng) {
        self.in_tree.fill(false);
        self.in_tree[self.root] = true;
        self.next[self.root] = usize::MAX;
        for start in 0..self.in_tree.len() {
            let mut u = start;
            while !self.in_tree[u] {
                let nb = self.graph.neighbors(u);
                self.next[u] = nb[rng.random_range(0..nb.len())];
                u = self.next[u];
            }
            let mut u = start;
            while !self.in_tree[u] {
                self.in_tree[u] = true;
                u = self.next[u];
            }
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = (0..self.next.len())
            .filter(|&u| u != self.root)
            .map(|u| (u.min(self.next[u]), u.max(self.next[u])))
            .collect();
        e.sort_unstable();
        e
    }

    fn degree(&self, v: usize) -> usize {
        let up = usize::from(v != self.root);
        up + self.next.iter().filter(|&&p| p == v).count()
    }
}

/// One uniform spanning tree, as sorted vertex-index pairs.
pub fn sample_tree(graph: &HanoiGraph, seed: u64) -> Vec<(usize, usize)> {
    let mut w = Walker::new(graph);
    w.draw(&mut ChaCha8Rng::seed_from_u64(seed));
    w.edges()
}

/// Whether `edges` is a spanning tree of a graph on `n` vertices.
pub fn is_spanning_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() + 1 != n {
        return false;
    }
    crate::oracle::EdgeList::new(n, edges.to_vec()).is_connected()
}

fn chunk_degrees(graph: &HanoiGraph, v: usize, seed: u64, chunk: u64, len: u64) -> Vec<u8> {
    let mut w = Walker::new(graph);
    let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, chunk));
    (0..len)
        .map(|_| {
            w.draw(&mut rng);
            if cfg!(debug_assertions) {
                assert!(is_spanning_tree(graph.vertex_count(), &w.edges()));
            }
            w.degree(v) as u8
        })
        .collect()
}

/// Degree of `vertex` in each of `samples` independent uniform trees, in
/// sample order.
pub fn sample_degrees(
    graph: &HanoiGraph,
    vertex: &VertexLabel,
    samples: u64,
    seed: u64,
) -> Result<Vec<u8>> {
    let v = graph.require_vertex(vertex)?;
    let chunks: Vec<(u64, u64)> = (0..samples.div_ceil(CHUNK))
        .map(|j| (j, CHUNK.min(samples - j * CHUNK)))
        .collect();
    let run = |&(j, len): &(u64, u64)| chunk_degrees(graph, v, seed, j, len);
    #[cfg(feature = "parallel")]
    let parts: Vec<Vec<u8>> = {
        use rayon::prelude::*;
        chunks.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Vec<u8>> = chunks.iter().map(run).collect();
    Ok(parts.concat())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeTally {
    pub i: usize,
    pub count: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub empirical_freq: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub exact_prob: BigRational,
    /// `None` when the exact probability is 0 or 1.
    pub z_score: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleReport {
    pub n: u32,
    pub vertex: VertexLabel,
    pub samples: u64,
    pub seed: u64,
    pub rng: &'static str,
    pub root: VertexLabel,
    /// Degrees 1 to 3.
    pub degrees: Vec<DegreeTally>,
}

impl SampleReport {
    pub fn max_abs_z(&self) -> f64 {
        self.degrees
            .iter()
            .filter_map(|d| d.z_score)
            .fold(0.0, |m, z| m.max(z.abs()))
    }

    pub fn within(&self, bound: f64) -> bool {
        self.max_abs_z() < bound
    }
}

/// `(freq - p) sqrt(N) / sqrt(p (1 - p))`.
pub fn z_score(count: u64, samples: u64, exact: &BigRational) -> Option<f64> {
    if exact.is_zero() || exact.is_one() {
        return None;
    }
    let p = approx_f64(exact);
    let freq = count as f64 / samples as f64;
    Some((freq - p) * (samples as f64).sqrt() / (p * (1.0 - p)).sqrt())
}

/// Tallies degrees from an existing degree stream.
pub fn tally_report(
    graph: &HanoiGraph,
    vertex: &VertexLabel,
    degrees: &[u8],
    seed: u64,
) -> Result<SampleReport> {
    let samples = degrees.len() as u64;
    if samples < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_SAMPLES,
            got: samples,
        });
    }
    let exact = vertex_distribution(graph.level(), vertex)?.tree_probabilities();
    let mut counts = [0u64; 4];
    for &d in degrees {
        counts[d as usize] += 1;
    }
    let rows = (1..=3)
        .map(|i| DegreeTally {
            i,
            count: counts[i],
            empirical_freq: BigRational::new(BigInt::from(counts[i]), BigInt::from(samples)),
            exact_prob: exact[i].clone(),
            z_score: z_score(counts[i], samples, &exact[i]),
        })
        .collect();
    Ok(SampleReport {
        n: graph.level(),
        vertex: vertex.clone(),
        samples,
        seed,
        rng: RNG_NAME,
        root: VertexLabel::outmost(0),
        degrees: rows,
    })
}

pub fn empirical_degree_report(
    graph: &HanoiGraph,
    vertex: &VertexLabel,
    samples: u64,
    seed: u64,
) -> Result<SampleReport> {
    if samples < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_SAMPLES,
            got: samples,
        });
    }
    let degrees = sample_degrees(graph, vertex, samples, seed)?;
    tally_report(graph, vertex, &degrees, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_have_right_shape() {
        let g = HanoiGraph::build(2).unwrap();
        for seed in 0..50 {
            let t = sample_tree(&g, seed);
            assert_eq!(t.len(), 8);
            assert!(is_spanning_tree(9, &t));
            assert!(t.iter().all(|&(u, v)| g.neighbors(u).contains(&v)));
        }
    }

    #[test]
    fn seeds_are_deterministic() {
        let g = HanoiGraph::build(3).unwrap();
        assert_eq!(sample_tree(&g, 7), sample_tree(&g, 7));
        let a = sample_degrees(&g, &"010".parse().unwrap(), 5000, 3).unwrap();
        let b = sample_degrees(&g, &"010".parse().unwrap(), 5000, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn split_seeds_differ() {
        let s: std::collections::HashSet<u64> = (0..1000).map(|j| split_seed(42, j)).collect();
        assert_eq!(s.len(), 1000);
    }

    #[test]
    fn too_few_samples() {
        let g = HanoiGraph::build(1).unwrap();
        let r = empirical_degree_report(&g, &"0".parse().unwrap(), 10, 0);
        assert_eq!(r, Err(Error::TooFewSamples { min: 1000, got: 10 }));
    }
}
