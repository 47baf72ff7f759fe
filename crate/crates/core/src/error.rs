use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge or arc {0}")]
    UnknownEdge(EdgeId),
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("endpoints must differ, got {0} twice")]
    SameEndpoints(VertexId),
    #[error("direction ({tail}, {head}) does not match the endpoints of edge {edge}")]
    BadDirection {
        edge: EdgeId,
        tail: VertexId,
        head: VertexId,
    },
    #[error("orientation base graph must not contain arcs")]
    BaseHasArcs,
    #[error("orientation is partial: edge {0} has no direction")]
    PartialOrientation(EdgeId),
    #[error("bound function has no value for vertex {0}")]
    MissingBound(VertexId),
    #[error("arc set is not eulerian at vertex {0}")]
    NotEulerian(VertexId),
    #[error("digraph has no directed circuit")]
    Acyclic,
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("cubic graph has an odd number of vertices ({0})")]
    OddVertexCount(usize),
    #[error("cubic instance has no vertices")]
    EmptyInstance,
    #[error("instance too large: {what} is {actual}, limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("orientation does not belong to this graph")]
    GraphMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
    #[error("generation failed: {0}")]
    Generation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
