//! Library side of the `qhopf` command line: configuration, reports,
//! rendering and the verbs themselves.

pub mod commands;
pub mod config;
pub mod render;
pub mod report;

use thiserror::Error;

pub use commands::{run, Outcome};
pub use config::{Command, Format, Mode, NRange, QValue, RunConfig, SideChoice, Suite};
pub use report::{build_spectral_report, SpectralReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] qhopf::Error),
    #[error(transparent)]
    Coeff(#[from] qhopf::CoeffError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
