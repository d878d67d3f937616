use thiserror::Error;

use crate::solver::InvariantResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside an operation's domain (bad vertex, missing edge, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// The operation is undefined on this graph, typically because it is disconnected.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("format error on line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The search hit its node budget. `best` is the best feasible set found so far.
    #[error("node limit of {limit} exceeded (best so far: {})", best.value)]
    NodeLimit {
        limit: u64,
        best: Box<InvariantResult>,
    },

    #[error("resource limit: {0}")]
    Resource(String),

    /// A mathematical identity that must hold failed; this is a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn disconnected(what: &str) -> Self {
        Error::Domain(format!("{what} requires a connected graph"))
    }

    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: msg.into(),
        }
    }
}
