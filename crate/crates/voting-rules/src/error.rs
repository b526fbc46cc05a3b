use preference_core::PrefError;
use thiserror::Error;

/// Errors raised by rule evaluation and structure parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    /// A scoring vector is not weakly decreasing with `s_1 > s_m`.
    #[error("invalid scoring vector: {0}")]
    InvalidScoringVector(String),
    /// A vector's length does not match the number of alternatives.
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch {
        /// Required length.
        expected: usize,
        /// Supplied length.
        found: usize,
    },
    /// Copeland parameter outside `[0, 1]` or not rational.
    #[error("invalid Copeland parameter {0:?}: expected a rational p/q in [0, 1]")]
    InvalidAlpha(String),
    /// Unrecognised rule identifier.
    #[error("unknown rule {0:?}")]
    UnknownRule(String),
    /// The rule is not of the kind the operation needs.
    #[error("rule {rule} is not {expected}")]
    WrongRuleKind {
        /// The rule identifier.
        rule: String,
        /// What the operation needs.
        expected: &'static str,
    },
    /// Exhaustive enumeration guard exceeded.
    #[error("{m} alternatives exceed the supported maximum of {max} for this operation")]
    TooManyAlternatives {
        /// Requested number of alternatives.
        m: usize,
        /// Supported maximum.
        max: usize,
    },
    /// Malformed total preorder.
    #[error("invalid total preorder: {0}")]
    InvalidPreorder(String),
    /// Malformed PUT structure.
    #[error("invalid PUT structure: {0}")]
    InvalidPut(String),
    /// Error from the preference layer.
    #[error(transparent)]
    Pref(#[from] PrefError),
}
