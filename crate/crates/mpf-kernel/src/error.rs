use thiserror::Error;

/// Errors produced by the analytic kernel.
#[derive(Debug, Error)]
pub enum KernelError {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative procedure failed to reach the requested tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),
    /// Invalid precision context.
    #[error("invalid precision context: {0}")]
    Context(String),
    /// A computation would exceed the configured resource budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, KernelError>;
