use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("numerical failure: {0}")]
    Numerical(#[from] qdeph_core::Error),
    #[error("{failed} of {total} rows failed to converge")]
    RowsFailed { failed: usize, total: usize },
    #[error("verification failed: {0} mandatory check(s) did not pass")]
    VerificationFailed(usize),
}

impl LabError {
    pub fn config(msg: impl Into<String>) -> Self {
        LabError::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        LabError::Io { path: path.into(), source }
    }

    /// Process exit status: 1 verification failure, 2 configuration (and
    /// I/O) error, 3 numerical non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::VerificationFailed(_) => 1,
            LabError::Config(_) | LabError::Io { .. } => 2,
            LabError::Numerical(_) | LabError::RowsFailed { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
