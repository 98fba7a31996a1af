use thiserror::Error;

/// Process-level error classes. Exit codes: 0 success, 1 configuration
/// or input validation, 2 numeric (degenerate factor, singular spectrum,
/// failed verification), 3 i/o.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),

    #[error("trajectory: {0}")]
    Trajectory(String),

    #[error(transparent)]
    Numeric(#[from] circulant_swarm::Error),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Trajectory(_) => 1,
            CliError::Numeric(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}
