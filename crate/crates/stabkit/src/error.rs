use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input graph is disconnected: no path between '{0}' and '{1}'")]
    Disconnected(String, String),
    #[error("input graph is not a tree")]
    NotATree,
    #[error("input graph is not a block graph: block {{{0}}} is not a clique")]
    NotABlockGraph(String),
    #[error("input graph is not a split graph")]
    NotSplit,
    #[error("input graph is not an interval graph")]
    NotInterval,
    #[error("not an edge of the block-tree: (block {block}, cut vertex '{cut}')")]
    NotABlockTreeEdge { block: usize, cut: String },
    #[error("vertex sets of representation and graph differ: {0}")]
    VertexSetMismatch(String),
    #[error("representation is not valid in {mode} mode: {summary}")]
    InvalidRepresentation { mode: String, summary: String },
    #[error("exactification only supports k <= 3 stab lines, got {0}")]
    TooManyStabLines(usize),
    #[error("rectangles do not all have the same height")]
    HeightsDiffer,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("graph has {n} vertices which exceeds the oracle cap {cap} (raise STABKIT_ORACLE_CAP at your own risk)")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("class predicate '{predicate}' is not applicable: {reason}")]
    PredicateNotApplicable { predicate: String, reason: String },
    #[error("internal error (this is a bug): {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
