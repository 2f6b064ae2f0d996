use thiserror::Error;

/// Errors reported by the graph engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad arguments: out-of-range vertex, invalid family parameter, unknown name.
    #[error("input error: {0}")]
    Input(String),

    /// Malformed edge-list or hypergraph document.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The invariant is undefined on this input (e.g. isolated vertices for the total variant).
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller broke an operation's precondition (illegal extension, incomplete process).
    #[error("contract violation: {0}")]
    Contract(String),

    /// The graph is larger than the bit-set capacity or the exponential-search guard.
    #[error("capacity error: {n} vertices exceeds the limit of {limit}")]
    Capacity { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
