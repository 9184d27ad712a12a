use thiserror::Error;

use crate::axiom::Axiom;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A text input could not be parsed. `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("a groupoid needs a nonempty vertex set")]
    EmptyVertexSet,

    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("size mismatch: {left} vertices vs {right} vertices")]
    SizeMismatch { left: usize, right: usize },

    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },

    #[error("cell family has {found} cells, expected {expected}")]
    CellShape { expected: usize, found: usize },

    #[error("cell ({u}, {v}) is not strictly ascending")]
    UnsortedCell { u: usize, v: usize },

    /// Vertex `v` lies in `count` cells of the family `{V_{u,w} | w in N[u]}`
    /// instead of exactly one.
    #[error("vertex {v} lies in {count} blocks of the partition at {u}")]
    NotAPartition { u: usize, v: usize, count: usize },

    #[error("precondition failed: {0} does not hold")]
    AxiomFailed(Axiom),

    #[error("the groupoid is not on the given graph")]
    NotOnGraph,

    #[error("oracle refuses graphs with {n} vertices (limit {limit})")]
    OracleLimit { n: usize, limit: usize },
}
