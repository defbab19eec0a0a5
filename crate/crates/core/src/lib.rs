//! Exact spanning-tree statistics for Tower-of-Hanoi graphs.
//!
//! * [`graph`]: explicit construction of `H_n` and edge-list export.
//! * [`count`]: exact sizes of the spanning-tree and spanning-forest classes.
//! * [`entropy`]: spanning-tree entropy to arbitrary precision.
//! * [`degree`]: exact degree distribution of every vertex.
//! * [`oracle`]: determinant and enumeration references.
//! * [`sampler`]: uniform spanning-tree sampling.

pub mod count;
pub mod degree;
pub mod entropy;
pub mod error;
pub mod exact;
pub mod graph;
pub mod label;
pub mod oracle;
pub mod sampler;

pub use count::{count_closed, count_recursive, verify_identities, ClassVector};
pub use degree::{vertex_dist, vertex_distribution, DistVector, SubgraphClass, VertexDistribution};
pub use entropy::{entropy, EntropyLevel, EntropyValue};
pub use error::{Error, Result};
pub use exact::{ExactCount, ExactProb};
pub use graph::{build_graph, export_edges, ExportFormat, HanoiGraph};
pub use label::{compress_label, PegPermutation, VertexClass, VertexLabel};
pub use oracle::{degree_poly, enumerate_trees, matrix_tree_count, DegreePolynomial, EdgeList};
pub use sampler::{empirical_degree_report, sample_tree, SampleReport};
