//! Batch experiment harness for the 2D linear-acoustics laboratory.
//!
//! This crate wraps the `acoustics2d` solver library in a reproducible
//! command-line workflow: named experiment presets with overridable
//! parameters, a flat `key = value` config-file format, and deterministic
//! text artifacts (field dumps, axis profiles, kinetic-energy histories,
//! run reports) suitable for diffing and downstream plotting.
//!
//! The library surface is usable without the binary:
//!
//! * [`ExperimentConfig`] / [`ExperimentKind`] — a fully specified run;
//!   presets for each experiment via [`ExperimentConfig::preset`].
//! * [`init_experiment`] — initial fields (in physical variables) for a
//!   config on its grid.
//! * [`run_experiment`] — execute a config end to end and write artifacts.
//! * [`extract_axis_profile`] — transverse-velocity profile along the
//!   positive jump axis of the corner experiment, paired with the
//!   closed-form reference where available.
//! * [`write_fields_csv`] / [`write_vtk`] — deterministic field output.
//! * [`load_config`] / [`parse_config`] — config-file parsing.

pub mod configfile;
pub mod experiment;
pub mod output;
pub mod profile;
pub mod runner;

pub use configfile::{load_config, parse_config};
pub use experiment::{init_experiment, ExperimentConfig, ExperimentKind};
pub use output::{read_fields_csv, write_energy_csv, write_fields_csv, write_profile_csv, write_vtk};
pub use profile::{extract_axis_profile, ProfileSample, RadialProfile};
pub use runner::{run_experiment, RunSummary};

use std::path::PathBuf;

/// Errors produced by the experiment harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An error surfaced by the solver library.
    #[error(transparent)]
    Core(#[from] acoustics2d::Error),

    /// A filesystem operation failed.
    #[error("i/o error on {path}: {source}")]
    Io {
        /// Path the operation was acting on.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },

    /// A config file (or a value in one) could not be parsed.
    #[error("config error: {0}")]
    Config(String),

    /// A request is outside what the harness supports (for example asking
    /// for an axis profile of an experiment that has none).
    #[error("{0}")]
    Unsupported(String),
}

/// Result alias for the harness.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
