use thiserror::Error;

/// Errors raised by graph construction, propagation, solving and the transforms.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("removing every vertex would leave an empty graph")]
    WouldBeEmpty,
    #[error("invalid edge {{{u}, {v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration budget exceeded: {needed} candidate sets needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("vertex {vertex} has {found} external private neighbors, needs at least {needed}")]
    DeficientPrivates { vertex: usize, found: usize, needed: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph of order {order} exceeds the size cap {cap}")]
    SizeCap { order: u128, cap: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
