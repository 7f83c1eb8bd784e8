use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type `{0}`: expected A1..A9, D4..D8, E6, E7 or E8")]
    InvalidCartanType(String),
    #[error("operation requires type A, got {0}")]
    RequiresTypeA(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("root {0:?} is not positive")]
    NotPositive(Vec<i64>),
    #[error("unsupported weight: {0}")]
    UnsupportedWeight(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0} is too large for full enumeration")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("walk is not a quantum walk")]
    NotQuantum,
    #[error("class cannot be put in module form: {0}")]
    Unreachable(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
