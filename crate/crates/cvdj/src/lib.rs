//! Command-line driver and host-side tooling for `cvdj-core`: FFT
//! cross-checks, rayon-parallel enumeration and Monte Carlo, figure data and
//! CSV/JSON output.

pub mod cli;
pub mod crosscheck;
pub mod figures;
pub mod output;
pub mod parallel;

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] cvdj_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Invalid(String),
}
