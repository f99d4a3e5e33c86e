use thiserror::Error;

use luqikeng_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{0}")]
    Usage(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for anything the caller can fix in the invocation, 3 when the m
    /// search cap runs out.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
