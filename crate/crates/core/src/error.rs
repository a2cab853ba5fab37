use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input violated the operation's precondition.
    Domain(String),
    /// A configured size or effort cap was hit.
    Resource {
        message: String,
        /// Best feedback vertex set size known when the search stopped.
        best_upper_bound: Option<usize>,
    },
    /// A construction that should always succeed did not. Signals a bug.
    Integrity(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource { message: msg.into(), best_upper_bound: None }
    }

    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Resource { message, best_upper_bound: Some(b) } => {
                write!(f, "resource limit: {message} (best known upper bound {b})")
            }
            Error::Resource { message, .. } => write!(f, "resource limit: {message}"),
            Error::Integrity(m) => write!(f, "integrity error: {m}"),
        }
    }
}

impl core::error::Error for Error {}
