use thiserror::Error;

use crate::extension::PrecoloringReport;
use crate::graph::EdgeId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}")]
    DuplicateEdge(EdgeId),

    #[error("vertex index {index} out of range (graph has {order} vertices)")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("edge {0} is not in the graph")]
    UnknownEdge(EdgeId),

    #[error("graph is not bipartite (odd cycle {cycle:?})")]
    NotBipartite { cycle: Vec<usize> },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("one-factorization needs an even order, got {0}")]
    OddOrder(usize),

    #[error("edge {0} has no assigned color")]
    MissingEdgeAssignment(EdgeId),

    #[error("list of edge {edge} has {len} colors, engine needs at least {required}")]
    ListTooShort { edge: EdgeId, len: usize, required: usize },

    #[error("list of edge {edge} has {len} colors, below its demand {demand}")]
    DemandViolation { edge: EdgeId, len: usize, demand: usize },

    #[error("too many distinct colors for the exact search ({0} > 128)")]
    PaletteTooLarge(usize),

    #[error("invalid precoloring: {0}")]
    InvalidPrecoloring(PrecoloringReport),

    #[error("hypothesis does not hold: {0}")]
    Inapplicable(String),

    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExceeded { nodes: u64 },

    #[error("internal error: stable matching is not a kernel ({0})")]
    InternalNoKernel(String),

    #[error("internal error: list coloring guaranteed to exist was not found")]
    InternalTheoremViolation,

    #[error("internal error: construction invariant violated ({0})")]
    InternalProofInvariantViolated(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that can only come from a bug, never from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalNoKernel(_)
                | Error::InternalTheoremViolation
                | Error::InternalProofInvariantViolated(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
