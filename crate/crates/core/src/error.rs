use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("graph must be cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph has maximum degree above 3: vertex {vertex} has degree {degree}")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not connected")]
    Disconnected,
    #[error("cycle of length {0} is odd; orientation parity is traversal dependent")]
    OddCycle(usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("search space of 2^{dimension} orientation classes exceeds budget 2^{budget}")]
    SearchBudget { dimension: usize, budget: usize },
    #[error("orientation is not Pfaffian: central cycle {0:?} is evenly oriented")]
    NotPfaffian(Vec<usize>),
    #[error("skew determinant {0} is not a perfect square")]
    NotPerfectSquare(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("invalid polyhex parameters: {0}")]
    InvalidSpec(String),
    #[error("identification collision: {0}")]
    IdentificationCollision(String),
    #[error("embedding carries no crossing-edge labels (not a non-bipartite Klein polyhex)")]
    NoCrossingEdges,
    #[error("operation requires a torus polyhex, got {0}")]
    NotTorus(String),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("invalid tri-sum: {0}")]
    InvalidTriSum(String),
    #[error("oracle sweep limited to {limit} vertices, got {max_vertices}")]
    SweepLimit { max_vertices: usize, limit: usize },
    #[error("io error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}
