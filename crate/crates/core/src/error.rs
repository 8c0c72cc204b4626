use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },

    #[error("line {line}: vertex {vertex} is out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: u64 },

    #[error("edge ({u}, {v}) is invalid for a graph with {n} vertices")]
    InvalidEdge { u: VertexId, v: VertexId, n: usize },

    #[error("order k must be at least 1")]
    InvalidOrder,

    #[error("component of size {size} is too small for k = {k}")]
    ComponentTooSmall { size: usize, k: usize },

    #[error("solution dictionary reached its cap of {cap} entries")]
    DictionaryFull { cap: usize },

    #[error("brute-force oracle refuses n = {n} (cap is {cap})")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("maximum degree {delta} < 2: the bound is singular, count exactly instead")]
    ExactSmallDegree { delta: usize },

    #[error("host graph must be connected")]
    DisconnectedHost,

    #[error("invalid graph recipe: {0}")]
    InvalidRecipe(String),

    #[error("unknown algorithm '{0}' (expected irwd, rwd or brute)")]
    UnknownAlgorithm(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
