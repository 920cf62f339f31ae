//! Experiment drivers behind the `obstacle` command.
//!
//! Every command turns its inputs into a [`Report`]: a JSON value whose bytes
//! depend only on the input files, the flags and the seed.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;
pub mod svg;

pub use error::CliError;
pub use report::{Artifact, Report};
