use thiserror::Error;

use crate::graph::EdgeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("edge {edge}: endpoint `{vertex}` is not a declared vertex")]
    DanglingEndpoint { edge: EdgeId, vertex: String },

    #[error("edge ids must be positive")]
    ZeroEdgeId,

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("contracting produced two vertices labelled `{0}`")]
    LabelCollision(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("digraph is not bipolar with respect to edge {0}")]
    NotBipolar(EdgeId),

    #[error("edge {p} is not the smallest edge (smallest is {min})")]
    NotMinimumEdge { p: EdgeId, min: EdgeId },

    #[error("not a spanning tree: {0}")]
    InvalidTree(String),

    #[error("edge {0} is not in the tree")]
    NotInTree(EdgeId),

    #[error("edge {0} is in the tree")]
    InTree(EdgeId),

    #[error("tree {0} is not uniactive internal")]
    NotUniactive(String),

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("graph carries no minor trace")]
    NoTrace,

    #[error("infinity edge {0} missing from cocycle")]
    MissingInfinityEdge(EdgeId),

    #[error("invalid optimizable digraph: {0}")]
    InvalidOptimizable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{count} spanning trees satisfy the full optimality criterion (expected exactly one)")]
    UniquenessViolation { count: usize },

    /// An invariant that the underlying theory guarantees failed to hold.
    #[error("theory alarm: {0}")]
    Alarm(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
