use thiserror::Error;

/// Errors raised by the analytic routines, the Fock-space oracle and the scanner.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("truncation {truncation} too small: tail mass {tail_mass:e} beyond cutoff")]
    Truncation { truncation: usize, tail_mass: f64 },

    #[error("degenerate state: norm squared {norm_squared:e} is numerically zero")]
    DegenerateState { norm_squared: f64 },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("grid of {points} points exceeds the limit of {limit}")]
    GridTooLarge { points: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
