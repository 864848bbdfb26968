use std::path::{Path, PathBuf};

use tcva_core::analysis::AnalysisError;
use tcva_core::geometry::GeometryError;
use tcva_core::pattern::PatternError;
use tcva_core::touchstone::TouchstoneError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 1,
            CliError::Io { .. } => 2,
        }
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    /// Prefixes a domain error with the file it came from.
    pub fn in_file(self, path: &Path) -> Self {
        match self {
            CliError::Domain(m) => CliError::Domain(format!("{}: {m}", path.display())),
            other => other,
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<PatternError> for CliError {
    fn from(e: PatternError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<TouchstoneError> for CliError {
    fn from(e: TouchstoneError) -> Self {
        match e {
            TouchstoneError::Io { path, source } => CliError::Io { path: path.into(), source },
            other => CliError::Domain(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
