use thiserror::Error;

/// Errors raised by graph construction, the solvers and the parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set covers every vertex")]
    NothingLeft,
    #[error("{what}: order {n} exceeds budget {max}")]
    Budget {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("memo table exceeded {0} entries")]
    MemoCap(usize),
    #[error("graph is complete; no non-adjacent pair")]
    Complete,
    #[error("graph is not a tree")]
    NotTree,
    #[error("signature {0} is not RP")]
    NotRp(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
