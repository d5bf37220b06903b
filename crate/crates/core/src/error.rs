use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RiceError {
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("degenerate covariance at x = {x}")]
    DegenerateCovariance { x: f64 },

    /// Fewer than three increments carry variance, so (Q, Q', Q'') is singular everywhere.
    #[error("degenerate model: effective rank {rank} < 3")]
    DegenerateModel { rank: usize },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("non-finite intermediate in {0}")]
    NonFinite(&'static str),

    /// Subdivision budget exhausted. Carries the best estimate reached.
    #[error("tolerance not met: best estimate {value} with error {abs_error}")]
    ToleranceNotMet { value: f64, abs_error: f64 },
}

pub type Result<T> = std::result::Result<T, RiceError>;
