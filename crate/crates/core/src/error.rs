use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight {0} is not dominant: consecutive differences must be non-negative integers")]
    NonDominant(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{what} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("sets are not disjoint")]
    NotDisjoint,

    #[error("entries must be integers for {0}")]
    NotIntegral(&'static str),

    #[error("zero vector has no cyclic span")]
    ZeroVector,

    #[error("no tensor factors given")]
    NoFactors,

    #[error("witness precondition failed: {0}")]
    WitnessPrecondition(String),

    #[error("module dimension {dim} exceeds the configured cap {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
