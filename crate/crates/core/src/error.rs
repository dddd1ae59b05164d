use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A shape or tableau string could not be parsed.
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// Arguments outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A mathematical invariant that should always hold was found violated.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
