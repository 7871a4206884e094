use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("vertex index {index} out of range for {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("edge id {id} out of range for {len} edges")]
    EdgeOutOfRange { id: usize, len: usize },
    #[error("set is not contained in the reference set: {0}")]
    NotSubset(String),
    #[error("definition-based Pfaffian is capped at {max} indices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("invalid superposition: {0}")]
    InvalidSuperposition(String),
    #[error("vertex `{0}` is not a coloured endpoint")]
    NotColoured(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("graph has no embedding")]
    MissingEmbedding,
    #[error("parallel edges {a} and {b} carry opposite orientations")]
    ParallelConflict { a: usize, b: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
