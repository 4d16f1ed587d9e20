use std::path::PathBuf;

use dihomo_core::{Error as CoreError, PvError};

/// Everything that can stop a command, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{}: {source}", path.display())]
    Pv { path: PathBuf, source: PvError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    /// 1 for bad input, 2 for axiom or validation violations, 3 when a
    /// search ran out of budget.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                CoreError::Cyclic(_)
                | CoreError::InvalidComplex(_)
                | CoreError::InvalidFlow(_)
                | CoreError::InvalidMorphism(_) => 2,
                CoreError::BudgetExhausted { .. } => 3,
                _ => 1,
            },
            _ => 1,
        }
    }
}
