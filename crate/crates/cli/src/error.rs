use std::fmt;
use std::process::ExitCode;

pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_INVALID_PARAMETERS: u8 = 2;
pub const EXIT_NOT_CONVERGED: u8 = 3;
pub const EXIT_REGION: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(gegen_core::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        let code = match self {
            CliError::Core(gegen_core::Error::Region { .. }) => EXIT_REGION,
            CliError::Core(gegen_core::Error::NonFinite(_)) => EXIT_NOT_CONVERGED,
            _ => EXIT_INVALID_PARAMETERS,
        };
        ExitCode::from(code)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gegen_core::Error> for CliError {
    fn from(e: gegen_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}
