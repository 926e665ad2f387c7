use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} out of range")]
    UnknownVertex(usize),
    #[error("edge {0} out of range")]
    UnknownEdge(usize),
    #[error("terminal set must have even size")]
    OddTerminalCount,
    #[error("resigning shore meets the terminal set oddly")]
    InvalidResign,
    #[error("edge {0} is odd; resign before contracting")]
    MustResignFirst(usize),
    #[error("cannot contract loop {0}")]
    ContractLoop(usize),
    #[error("contraction set admits no valid resigning (it contains an odd circuit or an odd T-join)")]
    NotAValidMinor,
    #[error("ground set too large: {got} exceeds the supported maximum {max}")]
    TooLarge { got: usize, max: usize },
    #[error("not an antichain: member {0} contains member {1}")]
    NotAntichain(usize, usize),
    #[error("clutter delete and contract sets overlap")]
    MinorOverlap,
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("obstruction present: {0}")]
    ObstructionFound(String),
    #[error("obstruction scan inconclusive (search budget exceeded)")]
    ScanInconclusive,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
