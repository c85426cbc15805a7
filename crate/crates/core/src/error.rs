use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedSystem(String),

    #[error("{0:?} is not a root of the system")]
    InvalidRoot(Vec<i32>),

    #[error("roots {0:?} and {1:?} are not orthogonal")]
    InvalidPair(Vec<i32>, Vec<i32>),

    #[error("square index {index} out of range (square has {pairs} pairs)")]
    IndexOutOfRange { index: i32, pairs: usize },

    #[error("roots do not form an A3 chain (alpha, beta, gamma)")]
    NotAnA3Triple,

    #[error("pair is not in S_2pi/3 of the given orthogonal pair")]
    NotInS2Pi3,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("system mismatch: expected {expected}, got {got}")]
    SystemMismatch { expected: String, got: String },

    #[error("ring mismatch: expected {expected}, got {got}")]
    RingMismatch { expected: String, got: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
