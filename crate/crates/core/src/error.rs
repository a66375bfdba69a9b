use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    Context(String),

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("genericity violation: {0}")]
    Genericity(String),

    #[error("unknown crossing id {0}")]
    UnknownCrossing(u32),

    #[error("crossing {0} is not marked")]
    NotMarked(u32),

    #[error("crossing {0} is already marked")]
    AlreadyMarked(u32),

    #[error("inputs lie in different components: {0}")]
    DifferentComponent(String),

    #[error("empty fiber: {0}")]
    EmptyFiber(String),

    #[error("move not applicable: {0}")]
    MoveInapplicable(String),

    #[error("invalid diagram code: {0}")]
    InvalidCode(String),

    #[error("theorem violation (this is a bug): {0}")]
    TheoremViolation(String),

    #[error("registry error: {0}")]
    Registry(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }
}
