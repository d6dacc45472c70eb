use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants are grouped by who is at fault: malformed input
/// ([`Error::Parse`], [`Error::Syntax`], [`Error::Input`]), an input that is
/// well-formed but outside the domain of an operation ([`Error::Domain`],
/// [`Error::Precondition`]), and inputs that are too large for an exponential
/// algorithm ([`Error::Capacity`], [`Error::Resource`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: {got} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("resource limit reached: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejects inputs with more than `limit` vertices.
pub(crate) fn check_capacity(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::Capacity { what, got, limit })
    } else {
        Ok(())
    }
}
