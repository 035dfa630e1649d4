//! Catalog of reference tables, the verification engine, and output formats
//! for the multiplet calculator. The command-line front end lives in the
//! `multiplex` binary.

pub mod catalog;
pub mod formats;
pub mod rng;
pub mod verify;

/// Errors surfaced by the front end, split by exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unknown fixtures, malformed inputs (exit 2).
    Usage(String),
    /// Mathematically invalid input (exit 3).
    Domain(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<multiplex_core::Error> for CliError {
    fn from(e: multiplex_core::Error) -> CliError {
        CliError::Domain(e.to_string())
    }
}
