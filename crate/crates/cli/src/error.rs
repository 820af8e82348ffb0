//! Exit-code discipline: bad flags or values exit 2 with a usage message,
//! verification failures exit 1, success exits 0.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Invalid flag value or inconsistent flag combination.
    Usage(String),
    /// The command ran but its check failed.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failed(msg) => write!(f, "{msg}"),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
