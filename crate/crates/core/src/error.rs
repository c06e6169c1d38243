use alloc::string::String;

use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop or invalid edge ({u}, {w})")]
    InvalidEdge { u: Vertex, w: Vertex },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} is isolated in the induced subgraph")]
    IsolatedVertex(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("coloring does not match the graph: {0}")]
    ColoringMismatch(String),
    #[error("coloring uses {colors} colors, above the verifier cap of {cap}")]
    CapExceeded { colors: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: Vertex, n: usize },
    #[error("endpoints of a rainbow path query must differ")]
    SameEndpoints,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("graph is disconnected or has diameter greater than 2")]
    OutOfScopeGraph,
    #[error("graph does not belong to this construction case: {0}")]
    WrongCase(String),
    #[error("structural property violated: {0}")]
    StructureViolation(String),
    #[error("no verified coloring within budget; pair ({}, {}) not rainbow connected", .failing_pair.0, .failing_pair.1)]
    ConstructionFailure {
        failing_pair: (Vertex, Vertex),
        attempts: usize,
    },
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph is disconnected")]
    OutOfScopeGraph,
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
    #[error("no graph met the requirements after {tries} tries")]
    GenerationFailed { tries: usize },
}
