use preference_core::PrefError;
use thiserror::Error;
use voting_rules::RuleError;

/// Errors raised by sampling, enumeration and fitting.
#[derive(Debug, Error)]
pub enum McError {
    /// A distribution is malformed (wrong length, negative or not summing to one).
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    /// Parameters outside an operation's preconditions.
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    /// An exact computation would exceed its configured size cap.
    #[error("{what} needs {size} states, above the cap {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    /// Too few usable points for a fit.
    #[error("need at least 3 points with positive estimates, got {0}")]
    TooFewPoints(usize),
    /// Writing a report failed.
    #[error("output: {0}")]
    Output(String),
    /// Wrapped preference error.
    #[error(transparent)]
    Preference(#[from] PrefError),
    /// Wrapped rule error.
    #[error(transparent)]
    Rule(#[from] RuleError),
}

impl From<csv::Error> for McError {
    fn from(e: csv::Error) -> Self {
        McError::Output(e.to_string())
    }
}

impl From<std::io::Error> for McError {
    fn from(e: std::io::Error) -> Self {
        McError::Output(e.to_string())
    }
}
