//! Crate error type.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty corpus: no files admitted for analysis")]
    EmptyCorpus,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("inheritance cycle: {}", .0.join(" -> "))]
    InheritanceCycle(Vec<String>),

    #[error("unknown class: {0}")]
    UnknownClass(String),

    #[error("criterion unassessable: no applicable metrics for {0}")]
    CriterionUnassessable(String),

    #[error("no entities for metric: {0}")]
    NoEntities(String),

    #[error("reports share no metrics; nothing to compare")]
    DisjointReports,

    #[error("unknown output format: {0} (expected json, csv or table)")]
    UnknownFormat(String),

    #[error("invalid report file {path}: {message}")]
    InvalidReport { path: PathBuf, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
