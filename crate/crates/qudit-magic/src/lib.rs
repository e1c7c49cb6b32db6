//! Command-line front end, manifests, CSV/JSON artifacts and text formats
//! for the `qudit-magic-core` analysis crate.

pub mod cli;
pub mod commands;
pub mod format;
pub mod manifest;
pub mod output;

pub use cli::{Cli, Command};
pub use manifest::RunManifest;
pub use output::{Artifact, Cell, Format};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] qudit_magic_core::Error),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qudit_magic_core::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}
