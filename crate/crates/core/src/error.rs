use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set belongs to a host of size {found}, expected {expected}")]
    HostMismatch { expected: usize, found: usize },
    #[error("sets are not disjoint (both contain vertex {0})")]
    Overlapping(usize),
    #[error("weight vector has length {found}, graph has {expected} vertices")]
    WeightLength { expected: usize, found: usize },
}

/// An exact oracle refused to run or ran out of time.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetExceeded {
    #[error("{oracle} oracle supports at most {limit} vertices, got {n}")]
    TooLarge {
        oracle: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("{oracle} oracle exceeded its time budget")]
    Deadline { oracle: &'static str },
}
