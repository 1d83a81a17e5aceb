use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for graph of order {order}")]
    VertexOutOfRange { index: usize, order: usize },

    #[error("{what}: order {requested} exceeds the supported maximum {max}")]
    UnsupportedSize {
        what: &'static str,
        requested: usize,
        max: usize,
    },

    #[error("graph must be connected: {context}")]
    Disconnected { context: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
