use thiserror::Error;

/// Harness-level errors carrying the process exit code contract:
/// 0 success, 2 domain/config, 3 resource, 4 certification failure.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("resource: {0}")]
    Resource(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Domain(_) => 2,
            CliError::Resource(_) | CliError::Io(_) => 3,
            CliError::Certification(_) => 4,
        }
    }
}

impl From<mpf_kernel::KernelError> for CliError {
    fn from(e: mpf_kernel::KernelError) -> Self {
        use mpf_kernel::KernelError as K;
        match e {
            K::Resource(m) => CliError::Resource(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<mpf_exact::ExactError> for CliError {
    fn from(e: mpf_exact::ExactError) -> Self {
        use mpf_exact::ExactError as X;
        match e {
            X::Resource(m) => CliError::Resource(m),
            X::Cache(c) => CliError::Resource(c.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<mpf_smooth::SmoothError> for CliError {
    fn from(e: mpf_smooth::SmoothError) -> Self {
        use mpf_smooth::SmoothError as S;
        match e {
            S::Resource(m) => CliError::Resource(m),
            S::Io(io) => CliError::Io(io),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<mpf_law::LawError> for CliError {
    fn from(e: mpf_law::LawError) -> Self {
        CliError::Domain(e.to_string())
    }
}
