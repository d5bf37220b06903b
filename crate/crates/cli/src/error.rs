use std::path::PathBuf;

use rice_core::RiceError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Engine(#[from] RiceError),

    #[error("verification failed: {failed} of {total} rows outside tolerance")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    /// 1 usage, 2 degenerate or invalid model, 3 tolerance not met,
    /// 4 verification failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Read { .. } => 1,
            CliError::Engine(e) => match e {
                RiceError::InvalidQuery(_) => 1,
                RiceError::InvalidModel(_)
                | RiceError::DegenerateCovariance { .. }
                | RiceError::DegenerateModel { .. } => 2,
                RiceError::ToleranceNotMet { .. } | RiceError::NonFinite(_) => 3,
            },
            CliError::Verification { .. } => 4,
        }
    }
}
