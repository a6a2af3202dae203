use thiserror::Error;

/// Errors raised by the combinatorial and spectral operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {partition} does not fit in the {r}x{cols} rectangle")]
    ShapeOverflow { partition: String, r: usize, cols: usize },
    #[error("invalid frame: r={r}, d={d} (need 1 <= r < d)")]
    InvalidFrame { r: usize, d: usize },
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("cell ({row},{col}) is not a valid slide corner")]
    InvalidCorner { row: usize, col: usize },
    #[error("invalid RSK pair: {0}")]
    InvalidPair(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("malformed square: {0}")]
    MalformedSquare(String),
    #[error("inconsistent chain: {0}")]
    InconsistentChain(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("size {size} exceeds the configured bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("repeated parameter value: z_{a} = z_{b}")]
    RepeatedParameter { a: usize, b: usize },
    #[error("not singular: {0}")]
    NotSingular(String),
    #[error("malformed decgd: {0}")]
    InvalidDecgd(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
