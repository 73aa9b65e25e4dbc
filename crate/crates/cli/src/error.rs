use thiserror::Error;

use jaco_core::JacoError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, parameters or input documents.
    #[error("{0}")]
    Usage(String),
    /// Anything that went wrong after the input was accepted.
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl From<JacoError> for CliError {
    fn from(e: JacoError) -> Self {
        match e {
            JacoError::ArithmeticOverflow(_) => CliError::Runtime(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}
