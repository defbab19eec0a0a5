use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("level {n} exceeds the size limit of {limit} (raise it explicitly to go further)")]
    SizeLimit { n: u32, limit: u32 },
    #[error("invalid vertex label {label:?}: {reason}")]
    InvalidLabel { label: String, reason: &'static str },
    #[error("vertex {label} is not a vertex of H_{n}")]
    VertexNotInGraph { label: String, n: u32 },
    #[error("degree {0} is outside 0..=3")]
    DegreeOutOfRange(usize),
    #[error("unsupported export format {0:?} (expected edge-list or adjacency-json)")]
    UnknownFormat(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {count} spanning trees, above the enumeration limit of {limit}")]
    TreeLimit { count: BigUint, limit: u64 },
    #[error("sampling needs at least {min} samples, got {got}")]
    TooFewSamples { min: u64, got: u64 },
    #[error("internal inconsistency in {quantity}: {left} != {right}")]
    Inconsistency {
        quantity: String,
        left: String,
        right: String,
    },
}
