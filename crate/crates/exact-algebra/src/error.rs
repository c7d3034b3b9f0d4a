use thiserror::Error;

/// Errors of the exact-arithmetic kernel.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    /// Inversion met a zero divisor: the announced minimal polynomial is
    /// reducible and `factor` is a proper factor discovered by the extended
    /// Euclidean algorithm.
    #[error("zero divisor: minimal polynomial has proper factor {factor}")]
    ZeroDivisor { factor: String },
    #[error("zero polynomial has no radical")]
    ZeroPolynomial,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
