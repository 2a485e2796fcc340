//! Command-line front end: argument parsing, output records and the
//! acceptance checks behind `verify-all`.

pub mod checks;
pub mod commands;
pub mod record;

pub use commands::{run, Cli, CliError};
pub use record::OutputRecord;
