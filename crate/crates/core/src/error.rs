use thiserror::Error;

/// Errors raised by the algebra and graph layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different rings (shape or coefficient field differ).
    #[error("ring context mismatch: {0}")]
    Context(String),

    /// The operation is undefined for the given input (colon by the zero ideal,
    /// Fedder test on the unit ideal, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A size bound of an exhaustive routine was exceeded.
    #[error("capacity exceeded: {what} supports n <= {max}, got {got}")]
    Capacity { what: &'static str, max: usize, got: usize },

    /// Input outside the class handled by the structured prime decomposition.
    #[error("unsupported structure: {0}")]
    Unsupported(String),

    /// Malformed text input. `line` is 1-based; 0 when not line oriented.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
