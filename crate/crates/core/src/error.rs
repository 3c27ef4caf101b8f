use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation (zero where a unit
    /// is required, a constant polynomial where a degree is required, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An enumeration cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// The requested case is outside what the toolkit implements.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Malformed input data (certificate, table, catalog).
    #[error("parse error: {0}")]
    Parse(String),
    /// A search ran out of budget without deciding the question.
    #[error("undecided: {0}")]
    Undecided(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
