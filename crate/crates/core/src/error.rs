use thiserror::Error;

/// Errors produced by the graph, divisor and sumset engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact integer computation left the 128-bit range.
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what} supports at most {limit}, got {got}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("vertex index {index} out of range for a graph with {vertices} vertices")]
    VertexOutOfRange { index: usize, vertices: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The first generator image is not a unit, so the pairing does not give an isomorphism.
    #[error("no cyclic model: gcd(kappa_11 = {kappa_11}, kappa = {kappa}) = {gcd}")]
    NonCyclicModel {
        kappa_11: i128,
        kappa: i128,
        gcd: i128,
    },

    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
