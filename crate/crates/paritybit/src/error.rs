use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A matrix dimension exceeded a configured cap.
    #[error("dimension {dim} exceeds the configured maximum {max}")]
    SizeExceeded { dim: usize, max: usize },

    /// Two operands had incompatible dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A parameter violated one of its bounds.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A scalar argument fell outside its admissible interval.
    #[error("value {value} outside [{lo}, {hi}]")]
    Domain { value: f64, lo: f64, hi: f64 },

    /// A measurement basis failed the orthonormality check.
    #[error("basis is not orthonormal: {0}")]
    NonOrthonormalBasis(String),

    /// A matrix did not have the structure an operation requires.
    #[error("unexpected matrix structure: {0}")]
    Structure(String),

    /// The operation is not defined for the given signal pair.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
