use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The stream ended before a token, run field or header was complete.
    #[error("truncated input: {0}")]
    TruncatedInput(&'static str),

    /// A run byte of zero was found at the given payload offset.
    #[error("invalid run byte 0 at offset {offset}")]
    InvalidRunByte { offset: usize },

    #[error("run length must be at least 1")]
    ZeroRunLength,

    #[error("decoded bit count mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: u64, actual: u64 },

    #[error("format error: {0}")]
    Format(String),

    #[error("unknown corpus generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown codec `{0}`")]
    UnknownCodec(String),

    #[error("round trip failed for {path} with codec {codec}")]
    RoundTripFailed { path: String, codec: String },

    #[error("nothing to do: {0}")]
    EmptySelection(&'static str),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by malformed encoded data rather than I/O or usage.
    pub fn is_corrupt_input(&self) -> bool {
        matches!(
            self,
            Error::TruncatedInput(_)
                | Error::InvalidRunByte { .. }
                | Error::LengthMismatch { .. }
                | Error::Format(_)
                | Error::RoundTripFailed { .. }
        )
    }
}
