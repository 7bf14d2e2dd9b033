use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a loop")]
    Loop { v: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("unsupported size {n} (limit {limit}) for {what}")]
    UnsupportedSize { n: usize, limit: usize, what: &'static str },
    #[error("node expansion budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("set family contains an empty set at index {index}")]
    Infeasible { index: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not bipartite (odd cycle through vertex {vertex})")]
    NotBipartite { vertex: usize },
    #[error("validation error: {0}")]
    Validation(String),
}
