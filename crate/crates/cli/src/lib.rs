//! Library half of the `voclink` binary: scenario configuration, sweep
//! parsing and the CSV-producing command implementations.

pub mod commands;
pub mod config;
pub mod sweep;

/// Error carrying the process exit code: 2 for configuration and validation
/// problems, 3 for numeric failures.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

impl From<voclink_core::Error> for CliError {
    fn from(e: voclink_core::Error) -> Self {
        use voclink_core::Error::*;
        let code = match e {
            UnstableStep { .. } | NoConvergence | NeverCrosses => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}
