use std::path::PathBuf;

use thiserror::Error;

/// Errors raised while loading, validating or writing problem data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid sample table: {0}")]
    InvalidSamples(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("instance set changed between protocol steps (instance {index})")]
    InstanceDigestMismatch { index: usize },

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
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
