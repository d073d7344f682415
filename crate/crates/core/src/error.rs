use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("adjacency list parse error: {0}")]
    AdjacencyList(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is already present")]
    VertexPresent(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("leaf/degree condition violated: {0}")]
    LeafDegree(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("requested window entry ({i}, {j}) lies outside the dominance hull; the entry is provably 0")]
    OutsideWindow { i: usize, j: usize },

    #[error("computation exceeded its time budget")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
