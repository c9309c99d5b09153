use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {0} out of range (need 2 < q < 2^31)")]
    FieldOutOfRange(u64),
    #[error("operands belong to different fields (q = {0} vs q = {1})")]
    FieldMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("enumeration of {required} elements exceeds the cap of {cap}")]
    EnumerationCap { required: u128, cap: u128 },
    #[error("polynomials are linearly dependent")]
    LinearlyDependent,
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
