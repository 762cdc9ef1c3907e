use std::fmt;
use std::io;
use std::path::{Path, PathBuf};

use qrsort_core::report::ReportError;
use qrsort_core::{HarnessError, SortError};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or bad input data.
    Usage(String),
    Io {
        path: PathBuf,
        source: io::Error,
    },
    /// A self-check found a counterexample.
    Failed(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
        move |source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failed(msg) => f.write_str(msg),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for CliError {}

impl From<SortError> for CliError {
    fn from(err: SortError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<HarnessError> for CliError {
    fn from(err: HarnessError) -> Self {
        match err {
            HarnessError::CorrectnessFault { .. } => CliError::Failed(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ReportError> for CliError {
    fn from(err: ReportError) -> Self {
        match err {
            ReportError::Io { path, source } => CliError::Io { path, source },
            other => CliError::Usage(other.to_string()),
        }
    }
}
