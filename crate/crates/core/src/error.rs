use thiserror::Error;

use crate::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} has fewer than two vertices")]
    EdgeTooSmall(VertexSet),
    #[error("edges {0} and {1} are comparable under inclusion")]
    ComparableEdges(VertexSet, VertexSet),
    #[error("edge {0} is not contained in the vertex set")]
    EdgeOutsideVertexSet(VertexSet),
    #[error("vertex id {0} exceeds the supported range")]
    VertexOutOfRange(u64),
    #[error("edge {0} is not an edge of the hypergraph")]
    EdgeNotPresent(VertexSet),
    #[error("vertex {0} is not a vertex of the hypergraph")]
    VertexNotPresent(u32),
    #[error("{0} is not a subset of the vertex set")]
    NotASubset(VertexSet),
    #[error("vertex sets overlap in {0}")]
    OverlappingVertexSets(VertexSet),
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("a simplicial complex needs at least one face")]
    VoidComplex,
    #[error("family member {0} is not an edge of the hypergraph")]
    NotSubfamily(VertexSet),
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("hypergraph is not properly-connected")]
    NotProperlyConnected,
    #[error("hypergraph is not triangulated")]
    NotTriangulated,
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("recursion budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Malformed input, as opposed to resource or precondition failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::EdgeTooSmall(_)
                | Error::ComparableEdges(..)
                | Error::EdgeOutsideVertexSet(_)
                | Error::VertexOutOfRange(_)
                | Error::EdgeNotPresent(_)
                | Error::VertexNotPresent(_)
                | Error::NotASubset(_)
                | Error::OverlappingVertexSets(_)
                | Error::NotAFace(_)
                | Error::VoidComplex
                | Error::NotSubfamily(_)
                | Error::InvalidArgument(_)
                | Error::UnknownFixture(_)
                | Error::Parse { .. }
        )
    }

    pub fn is_resource_error(&self) -> bool {
        matches!(self, Error::CapacityExceeded(_) | Error::BudgetExceeded(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
