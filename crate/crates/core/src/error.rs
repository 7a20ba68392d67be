use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("field mismatch: characteristic {left} vs {right}")]
    FieldMismatch { left: u64, right: u64 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("vector is not contained in the ambient span")]
    NotContained,
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("generator {index} has degree 1; eliminate linear forms first")]
    LinearGenerator { index: usize },
    #[error("generator {index} is a nonzero constant")]
    UnitIdeal { index: usize },
    #[error("degree {degree} is outside the materialized window (bound {bound})")]
    Truncated { degree: i64, bound: i64 },
    #[error("relation {relation} has inconsistent degrees")]
    InconsistentDegrees { relation: usize },
    #[error("element is not a cycle")]
    NotACycle,
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
