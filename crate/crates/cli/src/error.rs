use tokenpower_core::Error as CoreError;

/// Process exit statuses.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const RESOURCE_CAP: u8 = 3;
    pub const IO: u8 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("input line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse { .. } | CliError::Io(_) | CliError::Json(_) => exit::IO,
            CliError::Core(e) => match e {
                CoreError::ResourceCap { .. } => exit::RESOURCE_CAP,
                CoreError::CheckFailed(_) => exit::CHECK_FAILED,
                _ => exit::USAGE,
            },
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
