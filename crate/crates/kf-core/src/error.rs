use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex `{0}` is not in the graph")]
    UnknownVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("subset is not contained in the ambient vertex set: {0}")]
    SubsetNotInAmbient(String),

    #[error("graph has {n} vertices; exhaustive subset scans are capped at {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("invalid control function: {0}")]
    InvalidControlFunction(String),

    #[error("size argument must be at least 1")]
    ZeroSize,

    #[error("tail of the control function does not cover size {0}")]
    TailNotCovered(u64),

    #[error("no graph size has control value below {0}; argument is out of domain")]
    BelowMinimum(String),

    #[error("operation requires alpha = 2 (got {0}); attachment arity depends on it")]
    UnsupportedAlpha(String),

    #[error("invalid amalgamation data: {0}")]
    InvalidAmalgam(String),

    #[error(
        "size window exceeded: the gap between the maximal size at this predimension and the \
         diagram size is {gap}, but one-point towers only account for gaps below 6"
    )]
    WindowExceeded { gap: u64 },

    #[error("unsupported bound: {0}")]
    UnsupportedBound(String),

    #[error("invalid independence diagram: {0}")]
    InvalidDiagram(String),

    #[error("typed graph invariant violated: {0}")]
    InvalidTypedGraph(String),

    #[error("pairs are not independent: {0}")]
    PairsNotIndependent(String),

    #[error("system is not triangular; unresolved variables: {0}")]
    NotTriangular(String),

    #[error("zero denominator while solving for {var}: {poly}")]
    ZeroDenominator { var: String, poly: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
