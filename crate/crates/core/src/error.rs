//! Shared error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's declared domain (bad base, negative
    /// radicand, parameter violating a family's congruence constraint, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Result would exceed a resource guardrail (polynomial term count).
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Text that does not parse as a polynomial / rational / parameter list.
    #[error("parse error: {0}")]
    Parse(String),

    /// Evaluation of a rational function at a zero of its denominator.
    #[error("denominator vanishes: {0}")]
    DenominatorZero(String),

    /// A generated object failed its own exact verification. This is a bug
    /// in the registry, never a user error, and is reported loudly.
    #[error("internal verification failure: {0}")]
    Internal(String),

    #[error("unknown family id `{0}`")]
    UnknownFamily(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
