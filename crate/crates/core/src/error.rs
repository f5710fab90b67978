use thiserror::Error;

/// Errors shared across the crate. Operations reject bad parameters and
/// report exhausted search budgets; they never return wrong answers.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the documented domain of the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A colouring, levelling or witness has the wrong length for the graph.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// The operation requires a tree.
    #[error("not a tree: {0}")]
    NotATree(String),

    /// The operation requires a connected graph.
    #[error("graph is not connected")]
    Disconnected,

    /// The levelling violates the unit-step constraint on some edge.
    #[error("invalid levelling: {0}")]
    InvalidLevelling(String),

    /// The levelling is not shadow-complete.
    #[error("levelling is not shadow-complete: {0}")]
    NotShadowComplete(String),

    /// A tree partition or decomposition fails validation.
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    /// The search budget ran out before the search space was exhausted.
    #[error("budget exhausted after {nodes} node expansions")]
    BudgetExhausted { nodes: u64 },

    /// An exhaustive search finished without finding what the construction
    /// requires. Surfaced rather than papered over.
    #[error("search failed: {0}")]
    SearchFailed(String),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
