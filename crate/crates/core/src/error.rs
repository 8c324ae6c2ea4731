use thiserror::Error;

use crate::graph::VertexSet;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate vertex {0} in ordering")]
    DuplicateVertex(usize),

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph too small for guarantee: need {needed} vertices, have {have}")]
    TooSmallForGuarantee { needed: u128, have: usize },

    #[error("best-effort search failed: {0}")]
    BestEffortFailed(String),

    #[error("input contract breach: {reason}")]
    ContractBreach {
        reason: String,
        witness: Option<(VertexSet, VertexSet)>,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
