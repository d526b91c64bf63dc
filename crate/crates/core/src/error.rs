use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the command-line exit codes: input errors map
/// to 2 and budget refusals to 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
