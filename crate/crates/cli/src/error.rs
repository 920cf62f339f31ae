use obstacle_core::Error;

/// Failures mapped to process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Other(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::PerturbationExhausted { .. } | Error::NoSimpleEmbedding => {
                CliError::Budget(e.to_string())
            }
            Error::InvalidParameter(msg) => CliError::Schema(msg),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}
