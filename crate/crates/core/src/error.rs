use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator block size {size} is out of range for width {width}")]
    BlockOutOfRange { width: usize, size: usize },

    #[error("letter sigma_{letter} is not a generator on {strands} strands")]
    LetterOutOfRange { strands: usize, letter: usize },

    #[error("strand counts differ: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("braid on {strands} strands cannot be destabilized on its right: {reason}")]
    NotDestabilizable { strands: usize, reason: &'static str },

    #[error("link specification is empty after normalization")]
    EmptyLink,

    #[error("invalid link parameters: {0}")]
    InvalidParameters(String),

    #[error("T-link is not normalized: {0}")]
    NotNormalized(String),

    #[error("isotopy precondition violated: {0}")]
    Precondition(String),

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
