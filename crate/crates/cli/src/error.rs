use std::fmt;
use std::io;

use braidforge_core::Error;
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(io::Error),
    /// Two presentations of the same link disagree on an invariant.
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Syntax { .. }) => 2,
            CliError::Core(Error::InternalInconsistency(_)) | CliError::Mismatch(_) => 4,
            CliError::Core(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => match e {
                Error::BlockOutOfRange { .. } => "block_out_of_range",
                Error::LetterOutOfRange { .. } => "letter_out_of_range",
                Error::WidthMismatch { .. } => "width_mismatch",
                Error::NotDestabilizable { .. } => "not_destabilizable",
                Error::EmptyLink => "empty_link",
                Error::InvalidParameters(_) => "invalid_parameters",
                Error::NotNormalized(_) => "not_normalized",
                Error::Precondition(_) => "precondition",
                Error::Syntax { .. } => "syntax",
                Error::InternalInconsistency(_) => "internal_inconsistency",
            },
            CliError::Io(_) => "io",
            CliError::Mismatch(_) => "invariant_mismatch",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({ "code": self.code(), "message": self.to_string() });
        if let CliError::Core(Error::Syntax { position, .. }) = self {
            err["position"] = json!(position);
        }
        json!({ "schema": 1, "error": err })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io(e) => e.fmt(f),
            CliError::Mismatch(m) => write!(f, "invariant mismatch: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;
