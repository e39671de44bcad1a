use thiserror::Error;

use crate::formulas::ValueOrInterval;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter lies outside the domain where an operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A malformed "ecg v1" file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A pattern string or other textual argument could not be understood.
    #[error("syntax error: {0}")]
    Syntax(String),

    /// The requested combination of algorithm and input is not supported.
    #[error("capability error: {0}")]
    Capability(String),

    /// A family descriptor violates one of its clauses.
    #[error("descriptor error: {0}")]
    Descriptor(String),

    /// A search ran out of its node/time budget or its vertex bound.
    #[error("budget exhausted: {reason}; value lies in {partial}")]
    Budget { reason: String, partial: ValueOrInterval },

    /// A produced witness failed independent re-validation. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
