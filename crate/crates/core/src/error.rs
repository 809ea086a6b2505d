use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate in {0}")]
    NonFinite(&'static str),

    #[error("bicomplex number is not invertible{}", if *.zero_divisor { " (zero divisor)" } else { " (zero)" })]
    NotInvertible { zero_divisor: bool },

    #[error("idempotent component {0} vanishes")]
    ZeroComponent(u8),

    #[error("tolerance {0} must be strictly positive")]
    InvalidTolerance(&'static str),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix of order {n} exceeds the configured maximum {max}")]
    TooLarge { n: usize, max: usize },

    #[error("eigenvalue iteration did not converge after {0} steps")]
    ConvergenceFailure(usize),

    #[error("lambda is not in the approximate point spectrum")]
    NotInApSpectrum,

    #[error("point {0:?} is not in the domain")]
    PointNotInX(String),

    #[error("coordinate {index} out of range for dimension {n}")]
    CoordinateOutOfRange { index: usize, n: usize },

    #[error("ideal is not proper")]
    NotProper,

    #[error("ideal {0} has no quotient field representative")]
    NoQuotient(&'static str),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
