use std::io;
use std::path::PathBuf;

/// Failures of the file formats, cache and commands.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Reading or writing a file failed.
    #[error("{path}: {source}")]
    Io {
        /// File involved.
        path: PathBuf,
        /// Underlying error.
        source: io::Error,
    },
    /// A line of an input file could not be accepted.
    #[error("line {line}: {reason}")]
    Parse {
        /// 1-based line number.
        line: usize,
        /// What was wrong.
        reason: String,
    },
    /// Input that parsed but is not valid for the operation.
    #[error("{0}")]
    Invalid(String),
    /// A numerical routine rejected its input.
    #[error(transparent)]
    Core(#[from] zetadim_core::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Self::Parse {
            line,
            reason: reason.into(),
        }
    }

    /// Process exit status: 1 for I/O failures, 2 for invalid input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io { .. } => 1,
            _ => 2,
        }
    }
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, Error>;
