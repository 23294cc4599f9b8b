//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point is not feasible for the problem region")]
    InfeasiblePoint,

    #[error("linear program is malformed: {0}")]
    MalformedLp(String),

    #[error("simplex pivot cap of {cap} exceeded")]
    PivotCapExceeded { cap: usize },

    #[error("vertex enumeration oracle supports at most {max} variables, got {got}")]
    OracleTooLarge { max: usize, got: usize },

    #[error("line search failed to accept a step within {cap} trials: {details}")]
    LineSearchCap { cap: usize, details: String },

    #[error("dual ascent for the proximal subproblem did not converge within {cap} iterations")]
    DualNonConvergence { cap: usize },

    #[error("operation not supported for this feasible region: {0}")]
    UnsupportedRegion(String),

    #[error("merit oracle is limited to dimension {max}, got {got}")]
    MeritDimension { max: usize, got: usize },

    #[error("trace file is malformed: {0}")]
    MalformedTrace(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
