use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_ORACLE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config file {path}: {message}")]
    Config { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] jcmaser_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(
        "oracle disagrees with the analytic density at gt = {gt}: max |Δ| = {diff:e} > {tol:e}"
    )]
    OracleMismatch { gt: f64, diff: f64, tol: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::OracleMismatch { .. } => EXIT_ORACLE,
            _ => EXIT_USAGE,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
