use std::io;
use std::path::PathBuf;

use quadsteer_core::PlanError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{file}:{line}: {message}")]
    Parse { file: String, line: usize, message: String },
    #[error("planning failed: {0}")]
    Plan(#[from] PlanError),
    #[error("{0} check(s) failed")]
    Validation(usize),
}

impl CliError {
    pub fn parse(file: &str, line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { file: file.to_string(), line, message: message.into() }
    }

    /// Process exit status for this error. 2 is left to argument errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } => 3,
            CliError::Parse { .. } => 4,
            CliError::Plan(_) => 5,
            CliError::Write { .. } => 6,
            CliError::Validation(_) => 7,
        }
    }
}
