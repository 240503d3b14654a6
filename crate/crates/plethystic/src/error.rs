use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("degree {needed} exceeds the configured budget {budget}")]
    DegreeBudget { needed: usize, budget: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("window evaluation exceeded the term budget of {budget}")]
    WindowTooLarge { budget: usize },
    #[error("unbounded evaluation: {0}")]
    Unbounded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("oracle: {0}")]
    Oracle(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a resource budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::DegreeBudget { .. } | Error::WindowTooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
