use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    /// A data file is missing or does not parse.
    #[error("{}: {message}", path.display())]
    Data { path: PathBuf, message: String },
    #[error("usage: {0}")]
    Usage(String),
}
