//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Failure modes of the exact-combinatorics layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input lies outside the mathematical domain of the operation.
    Domain(String),
    /// Request exceeds a hard enumeration cap.
    Capacity {
        what: &'static str,
        cap: usize,
        requested: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Capacity {
                what,
                cap,
                requested,
            } => write!(
                f,
                "capacity error: {what} is capped at {cap}, requested {requested}"
            ),
        }
    }
}

impl core::error::Error for Error {}
