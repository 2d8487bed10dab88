use thiserror::Error;

use crate::complex::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty simplex")]
    EmptySimplex,
    #[error("repeated vertex {0} in simplex")]
    RepeatedVertex(VertexId),
    #[error("vertex {vertex} out of range for a complex with {vertex_count} vertices")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("vertex {0} is not covered by any simplex")]
    UncoveredVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<VertexId>),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("complex is not flag")]
    NotFlag,
    #[error("complex is disconnected")]
    Disconnected,
    #[error("simplex {simplex:?} is not contained in a single sphere around {basepoint}")]
    MixedDistances { basepoint: VertexId, simplex: Vec<VertexId> },
    #[error("invalid dwheel: {0}")]
    InvalidDWheel(String),
    #[error("invalid disc diagram: {0}")]
    InvalidDisc(String),
    #[error("invalid diagram map: {0}")]
    InvalidMap(String),
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("no common dominator for {v:?} and {m:?} at step {step}")]
    NoDominator { step: usize, v: Vec<VertexId>, m: Vec<VertexId> },
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
