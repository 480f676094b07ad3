use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("vertex {0} already removed")]
    AlreadyRemoved(VertexId),
    #[error("no edge {0}-{1}")]
    NoSuchEdge(VertexId, VertexId),
    #[error("discovery center {0} is not alive")]
    DeadCenter(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("no pair of vertices has a finite distance")]
    NoFinitePairs,
    #[error("density needs at least two vertices")]
    TooSmall,
    #[error("betweenness table is empty")]
    EmptyTable,
    #[error("vertex {0} is not alive")]
    DeadVertex(VertexId),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FragmentError {
    #[error("fragment profile has no vertices")]
    EmptyProfile,
    #[error("fragment sizes must be positive and sum to n")]
    InvalidProfile,
    #[error("mean non-LCC fragment size is undefined with fewer than two components")]
    Undefined,
    #[error("ratio s/S is undefined when S = 0")]
    RatioUndefined,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DamageError {
    #[error("robustness ratio needs a positive baseline efficiency")]
    ZeroBaseline,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("bad attack profile syntax {0:?}, expected <E|V|D>:<L|M|H|R>")]
    BadSyntax(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    BadSpec(String),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
