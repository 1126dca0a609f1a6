use std::path::PathBuf;

use codegree_core::GroupError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Manifest { line: usize, message: String },
    #[error("manifest is empty")]
    EmptyManifest,
    #[error("bad group spec `{0}`: {1}")]
    Spec(String, String),
}

pub type Result<T> = std::result::Result<T, CliError>;
