use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("integer overflow while accumulating {0}")]
    Overflow(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
