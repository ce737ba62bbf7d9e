//! Command implementations behind the `hyperinv` binary.

pub mod commands;
pub mod document;

pub use commands::CliError;
