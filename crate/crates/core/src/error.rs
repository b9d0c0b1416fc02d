//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by validation of inputs or by resource caps.
///
/// Computation itself is exact and cannot fail; every fallible operation
/// fails before any partial result is produced.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violates a stated precondition; the message names it.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A text form could not be parsed into the requested domain type.
    #[error("parse error: {0}")]
    Parse(String),

    /// An enumeration would exceed the configured cap.
    #[error("cap exceeded: {what} would require {needed} > cap {cap}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        cap: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
