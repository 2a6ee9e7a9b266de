use thiserror::Error;

/// Failure of a command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config file or input syntax (exit 2).
    #[error("{0}")]
    Usage(String),
    /// A valid request that the physics cannot satisfy (exit 1).
    #[error("{0}")]
    Physics(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Physics(_) | Self::Io(_) => 1,
        }
    }
}

impl From<dyon_core::Error> for CliError {
    fn from(e: dyon_core::Error) -> Self {
        match e {
            dyon_core::Error::UnknownPreset(_) => Self::Usage(e.to_string()),
            other => Self::Physics(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
