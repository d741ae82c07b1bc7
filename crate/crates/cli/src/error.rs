use std::fmt;

use leibniz_core::Error;

/// Exit codes: 0 ok, 1 input error, 2 mathematical violation, 3 guard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Math(String),
    Guard(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Math(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "input error: {s}"),
            CliError::Math(s) => write!(f, "violation: {s}"),
            CliError::Guard(s) => write!(f, "refused: {s}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let s = e.to_string();
        match e {
            Error::LeibnizViolation { .. }
            | Error::BimoduleViolation { .. }
            | Error::LeftModuleViolation { .. }
            | Error::NotClosed(_)
            | Error::NotNilpotent(_) => CliError::Math(s),
            Error::MemoryGuard { .. } | Error::BudgetExceeded { .. } | Error::GenerationFailed { .. } => {
                CliError::Guard(s)
            }
            _ => CliError::Input(s),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
