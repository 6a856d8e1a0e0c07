//! Command-line front end for splitcheck: instance registry, verification
//! runs and report emission.

pub mod cli;
pub mod error;
pub mod registry;
pub mod render;
pub mod report;

pub use error::CliError;
