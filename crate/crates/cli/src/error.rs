use thiserror::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    InputError = 2,
    Inconsistent = 3,
    OutOfScope = 4,
    TheoremViolation = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("analytic and oracle results disagree: {0}")]
    Inconsistent(String),
    #[error("outside the scope of the classification theorem: {0}")]
    OutOfScope(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Input(_) | CliError::Io { .. } => ExitStatus::InputError,
            CliError::Inconsistent(_) => ExitStatus::Inconsistent,
            CliError::OutOfScope(_) => ExitStatus::OutOfScope,
        }
    }
}

impl From<coherent_concurrence::Error> for CliError {
    fn from(e: coherent_concurrence::Error) -> Self {
        use coherent_concurrence::Error as E;
        match e {
            E::InternalConsistency(msg) => CliError::Inconsistent(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}
