use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    Loop { line: usize, vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("brute-force search refused: {edges} edges exceeds the budget of {budget}")]
    EdgeBudget { edges: usize, budget: usize },

    #[error("host graph on {n} vertices is too large for this search (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("nontrivial product required: both factors need at least 2 vertices (got {g_n} and {h_n}); use decide_product for the trivial case")]
    TrivialProduct { g_n: usize, h_n: usize },

    #[error("invalid orientation: {0}")]
    Orientation(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
