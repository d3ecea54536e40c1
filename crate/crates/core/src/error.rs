use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A value fell outside the domain an operation accepts.
    #[error("domain error: {0}")]
    Domain(String),

    /// A decision matrix column cannot be normalized.
    #[error("degenerate input: criterion `{criterion}` {reason}")]
    Degenerate { criterion: String, reason: String },

    /// Input data failed validation (questionnaire, config, matrix files).
    #[error("{0}")]
    Validation(String),

    /// The aggregated output set is zero everywhere.
    #[error("inference error: no rule fired")]
    NoRuleFired,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn degenerate(criterion: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Degenerate {
            criterion: criterion.into(),
            reason: reason.into(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Whether the error stems from bad input content rather than the filesystem.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io { .. })
    }

    /// Prefixes validation-style messages with the file they came from.
    pub fn in_file(self, path: &std::path::Path) -> Self {
        match self {
            Error::Io { .. } => self,
            other => Error::Validation(format!("{}: {}", path.display(), other)),
        }
    }
}
