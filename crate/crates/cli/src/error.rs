use std::fmt;

/// Exit-code contract: 0 success, 2 usage or configuration error, 3 I/O.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl From<rate_regions::RegionError> for CliError {
    fn from(e: rate_regions::RegionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<info_core::InfoError> for CliError {
    fn from(e: info_core::InfoError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<twr_sim::SimError> for CliError {
    fn from(e: twr_sim::SimError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
