use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("tuple is not nonincreasing at position {position}")]
    NotNonincreasing { position: usize },
    #[error("entry {value} at position {position} exceeds bound {bound}")]
    EntryOutOfBounds {
        position: usize,
        value: usize,
        bound: usize,
    },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid strip encoding: {0}")]
    InvalidEncoding(String),
    #[error("cost table {table} has {actual} entries, expected {expected}")]
    CostTableLength {
        table: String,
        expected: usize,
        actual: usize,
    },
    #[error("row sums and column sums are not realizable")]
    Infeasible,
    #[error("instance too large for exhaustive search: {0}")]
    OracleBound(String),
}
