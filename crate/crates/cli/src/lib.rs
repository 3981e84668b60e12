//! Command implementations behind the `spantruss` binary.
//!
//! Every command writes to a caller-supplied sink so the integration tests
//! can drive them without spawning a process.

pub mod args;
pub mod bench;
pub mod commands;

use spantruss::{IngestError, MinerError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Miner(#[from] MinerError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("output: {0}")]
    Serialize(String),
}

impl CliError {
    /// 0 ok, 1 input error, 2 usage, 3 verification mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Mismatch(_) | CliError::Miner(MinerError::HeuristicDisagreement { .. }) => 3,
            CliError::Miner(MinerError::UnknownAlgorithm(_)) => 2,
            _ => 1,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Serialize(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Serialize(e.to_string())
    }
}
