use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid bracelet spec: {0}")]
    InvalidSpec(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid mark sequence: {0}")]
    InvalidMarks(String),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),

    /// A construction's hypothesis did not hold on the measured input.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search budget of {budget} nodes exhausted")]
    ResourceExceeded { budget: u64 },

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),

    /// A construction step that the underlying argument guarantees did not go through.
    #[error("internal construction failure: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
