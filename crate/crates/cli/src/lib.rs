//! Command-line front end for `penta5-core`: argument parsing, command handlers and reports.

pub mod args;
pub mod commands;
pub mod report;

pub use args::{Cli, Command, Format};
pub use commands::{run, CliError};
pub use report::{Report, ResultEntry};
