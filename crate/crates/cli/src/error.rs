use std::fmt;

/// Usage errors exit with status 2, everything else with status 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Input(String),
    Compute(rwinv_core::Error),
}

impl CliError {
    pub fn usage(m: impl Into<String>) -> Self {
        CliError::Usage(m.into())
    }

    pub fn input(m: impl Into<String>) -> Self {
        CliError::Input(m.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) | CliError::Compute(_) => 1,
        }
    }
}

impl From<rwinv_core::Error> for CliError {
    fn from(e: rwinv_core::Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}
