use thiserror::Error;

/// Errors produced by the decomposition calculus.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not coprime: gcd({left}, {right}) = {gcd}")]
    NotCoprime { left: String, right: String, gcd: String },

    #[error("parameters not ordered: am = {am} must be strictly less than bn = {bn}")]
    NotOrdered { am: u64, bn: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degree {degree} is outside the tabulated stable range (limit {limit})")]
    OutOfStableRange { degree: u64, limit: u64 },

    #[error("degree 1 on the quotient groups needs the fundamental-group formula (use tensor-quot-pi1)")]
    UseQuotPi1,

    #[error("ill-formed homomorphism: {0}")]
    IllFormedMap(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionOverflow { dim: String, cap: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("block index {index} out of range 1..={count}")]
    BadIndex { index: usize, count: usize },

    #[error("matrix is not unitary (deviation {deviation:e} > tolerance {tolerance:e})")]
    NotUnitary { deviation: f64, tolerance: f64 },

    #[error("eigen-decomposition of a {dim}x{dim} unitary did not converge")]
    NoConvergence { dim: usize },

    #[error("class has period {found}, expected {expected}")]
    WrongPeriod { expected: u64, found: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
