use thiserror::Error;

/// Failures of a command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] assoc_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    /// One or more checked claims failed; the names are listed.
    #[error("failed claims: {}", .0.join(", "))]
    Claims(Vec<String>),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    /// 1 for failed claims, 2 for bad input, 3 for capacity or convergence trouble.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Claims(_) => 1,
            CliError::Core(assoc_core::Error::Capacity { .. } | assoc_core::Error::Convergence { .. }) => 3,
            CliError::Io(_) => 3,
            _ => 2,
        }
    }
}

pub(crate) fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}
