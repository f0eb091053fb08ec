//! CLI error type carrying the process exit status.
//!
//! Contract: 0 = all checks pass, 1 = verification failure,
//! 2 = usage error, 3 = internal or infeasibility error.

use rootgap_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            // bad user input
            CoreError::UnsupportedRank { .. }
            | CoreError::InvalidParameter { .. }
            | CoreError::UnknownFamily(_)
            | CoreError::EmptyRange
            | CoreError::SearchCapExceeded { .. }
            | CoreError::PatternMismatch { .. } => CliError::Usage(e.to_string()),
            // everything else is an internal/infeasibility condition
            other => CliError::Compute(other.to_string()),
        }
    }
}
