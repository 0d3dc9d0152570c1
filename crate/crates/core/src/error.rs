use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    Vertex { vertex: usize, n: usize },

    #[error("{what} needs {needed} steps, budget is {budget}")]
    Budget {
        what: &'static str,
        needed: String,
        budget: u64,
    },

    #[error("property `{property}` cannot be evaluated on a {found} graph")]
    Mismatch {
        property: String,
        found: &'static str,
    },

    #[error("count overflowed the accumulator type in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn budget(what: &'static str, needed: impl ToString, budget: u64) -> Self {
        Error::Budget {
            what,
            needed: needed.to_string(),
            budget,
        }
    }
}
