//! Error type shared by all modules of the crate.

/// Errors produced by partition, graph, and symmetric-function operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two partitions that must have equal weight do not.
    #[error("partition weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),

    /// An exact integer accumulation exceeded the 128-bit range.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// An enumeration was asked to run beyond its supported size.
    #[error("{what} supports sizes up to {limit}, got {actual}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Partition text that does not follow the canonical "p1,p2,..." form.
    #[error("invalid partition text {text:?}: {reason}")]
    ParsePartition { text: String, reason: &'static str },

    /// A graph operation that requires connectivity received a disconnected graph.
    #[error("graph is not connected")]
    Disconnected,

    /// Structurally invalid graph input (bad endpoint, loop, duplicate edge, ...).
    #[error("invalid graph: {0}")]
    InvalidGraph(&'static str),

    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
