use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system type `{0}` (expected one of A1, A2, B2, G2, A3)")]
    UnsupportedType(String),
    #[error("inexact division: remainder has monomial {witness}")]
    InexactDivision { witness: String },
    #[error("element of length {length} exceeds the configured bound {bound}")]
    LengthBoundExceeded { length: usize, bound: usize },
    #[error("torus point is not regular; the orbit-evaluation system is singular")]
    NonRegularPoint,
    #[error("generic reduction produced a non-polynomial coefficient")]
    NonPolynomialCoefficient,
    #[error("identity check failed: {0}")]
    Mismatch(String),
    #[error("division by zero in the specialized scalar field")]
    DivisionByZero,
    #[error("operation requires type A1 or A2, got {0}")]
    UnsupportedForType(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
