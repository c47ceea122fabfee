use thiserror::Error;

use crate::auxgraph::Gridline;
use crate::grid::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{dir} edge out of {from} leaves the lattice of side {n}")]
    EdgeOutOfLattice {
        from: Vertex,
        dir: &'static str,
        n: usize,
    },

    #[error("vertex {vertex} lies outside the window of side {side}")]
    OutOfView { vertex: Vertex, side: usize },

    #[error("window at {origin} of side {side} does not fit in side {outer}")]
    WindowOutOfRange {
        origin: Vertex,
        side: usize,
        outer: usize,
    },

    #[error("vertex {vertex} is not on gridline {line:?}")]
    NotOnGridline { vertex: Vertex, line: Gridline },

    #[error("vertex {0} is not a vertex of the auxiliary graph")]
    NotAuxVertex(Vertex),

    #[error("{u} and {v} are not on a common row or column")]
    NotAligned { u: Vertex, v: Vertex },

    #[error("{prev} is not a neighbor candidate of {curr}")]
    NotANeighbor { curr: Vertex, prev: Vertex },

    #[error("invalid decomposition: side {n}, divisor {k}")]
    InvalidParams { n: usize, k: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
}
