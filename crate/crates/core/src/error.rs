use thiserror::Error;

/// Errors raised while building or querying a labelled space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent user input (graphs, words, sets, text forms).
    #[error("input error: {0}")]
    Input(String),

    /// An operation was applied outside of its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The accommodating family is not closed or not normal.
    #[error("family error: {0}")]
    Family(String),

    /// Relative ranges do not distribute over intersections.
    #[error("labelled space is not weakly left-resolving: {0}")]
    NotWeaklyLeftResolving(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
