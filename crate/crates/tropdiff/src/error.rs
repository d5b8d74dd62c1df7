use std::fmt;

use tropdiff_core::{Error, ParseError};

/// Failures of a command, each tied to a process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input or invalid invocation (exit 2).
    Parse(String),
    /// A mathematical precondition failed (exit 3).
    Domain(String),
    /// A result contradicted an independent check (exit 4).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Domain(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InconsistentOracle(_) => CliError::Internal(format!("InconsistentOracle: {e}")),
            Error::ZeroDenominator => CliError::Domain(format!("ZeroDenominator: {e}")),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::ZeroDenominator { .. } => CliError::Domain(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(format!("invalid JSON: {e}"))
    }
}
