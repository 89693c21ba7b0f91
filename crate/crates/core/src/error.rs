use thiserror::Error;

/// Errors raised by the library. Search exhaustion and budget overruns are
/// not errors; they are reported through [`crate::recognize::SearchStatus`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("connection set element {element} out of range for order {order}")]
    ConnectionOutOfRange { element: usize, order: usize },

    #[error("connection set must be non-empty")]
    EmptyConnectionSet,

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0} is not allowed in an undirected graph")]
    LoopInSimpleGraph(usize),

    #[error("vertex {vertex} has outdegree {outdegree}, expected exactly 1")]
    NotOneOutregular { vertex: usize, outdegree: usize },

    #[error("vertex {0} is a sink")]
    Sink(usize),

    #[error("vertex {vertex} has outdegree {outdegree} > {bound}")]
    OutdegreeTooLarge {
        vertex: usize,
        outdegree: usize,
        bound: usize,
    },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph contains a cycle")]
    NotAForest,

    #[error("condition not satisfied: {0}")]
    ConditionFails(String),

    #[error("function family invalid: {0}")]
    InvalidFamily(String),

    #[error("order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("budget of {0} exceeded")]
    BudgetExceeded(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("witness failed verification: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
