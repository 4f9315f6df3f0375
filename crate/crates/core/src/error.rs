use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph parse error: {0}")]
    Parse(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("duplicate identifier \"{0}\"")]
    DuplicateId(String),

    #[error("unknown vertex \"{0}\"")]
    UnknownVertex(String),

    #[error("unknown edge \"{0}\"")]
    UnknownEdge(String),

    #[error("edges do not form a path: \"{0}\" does not start where the previous edge ends")]
    NotAPath(String),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("vertex set is not hereditary")]
    NotHereditary,

    #[error("vertex set is not saturated")]
    NotSaturated,

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("cannot factor by the full vertex set")]
    FactorByAll,

    #[error("vertex set is not finitary (witness cycle {0})")]
    NotFinitary(String),

    #[error("cycle has an exit: \"{0}\"")]
    CycleHasExit(String),

    #[error("{what} exceeds limit: {actual} > {limit}")]
    LimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("element parse error: {0}")]
    ElementParse(String),

    #[error("element does not belong to this graph: {0}")]
    ForeignElement(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
