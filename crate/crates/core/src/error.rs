use alloc::string::String;
use core::fmt;

/// Errors raised by the core routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter lies outside the supported range.
    Range { what: &'static str, value: usize, min: usize, max: usize },
    /// Malformed or inconsistent input.
    InvalidInput(String),
    /// A diagonal that was asked for is not part of the triangulation.
    NotPresent { i: u8, j: u8 },
    /// The instance is larger than a configured capacity limit.
    Capacity { what: &'static str, size: usize, limit: usize },
    /// An iterative solver stopped before reaching its tolerance.
    Convergence { estimate: f64, residual: f64, iterations: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Range { what, value, min, max } => {
                write!(f, "{what} = {value} is out of range [{min}, {max}]")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NotPresent { i, j } => write!(f, "diagonal {i}-{j} is not in the triangulation"),
            Error::Capacity { what, size, limit } => {
                write!(f, "{what} size {size} exceeds the limit {limit}")
            }
            Error::Convergence { estimate, residual, iterations } => write!(
                f,
                "no convergence after {iterations} iterations (estimate {estimate}, residual {residual:e})"
            ),
        }
    }
}

impl core::error::Error for Error {}
