use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller supplied an argument outside the operation's domain.
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured guard (enumeration size, prime, ...) rejected the request.
    #[error("configuration error: {0}")]
    Config(String),

    /// A resource cap (faces, subsets, generators) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Malformed graph text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The witness finder produced a candidate whose homology does not vanish-check.
    #[error("witness certification failed: {message}\ntrace:\n{trace}")]
    WitnessCertification { message: String, trace: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
