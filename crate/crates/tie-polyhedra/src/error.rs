use preference_core::PrefError;
use rational_polyhedra::PolyError;
use thiserror::Error;
use voting_rules::RuleError;

/// Errors raised while building tie-event polyhedra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TieError {
    /// Two alternatives that must differ coincide.
    #[error("alternatives must be distinct, got {0} twice")]
    SameAlternative(usize),
    /// An alternative index is out of range.
    #[error("alternative {alternative} out of range for m={m}")]
    AlternativeOutOfRange {
        /// The 1-based label.
        alternative: usize,
        /// Number of alternatives.
        m: usize,
    },
    /// A vector's length does not match what the operation needs.
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch {
        /// Required length.
        expected: usize,
        /// Supplied length.
        found: usize,
    },
    /// A subset argument is empty or otherwise unusable.
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    /// The number of winners is outside `1..=m`.
    #[error("k={k} is out of range for m={m}")]
    InvalidK {
        /// Requested winners.
        k: usize,
        /// Number of alternatives.
        m: usize,
    },
    /// An enumeration guard was exceeded.
    #[error("{what} is limited to m <= {max}, got m={m}")]
    SizeGuard {
        /// What is being enumerated.
        what: &'static str,
        /// Requested number of alternatives.
        m: usize,
        /// Largest supported value.
        max: usize,
    },
    /// Wrapped preference-layer error.
    #[error(transparent)]
    Preference(#[from] PrefError),
    /// Wrapped rule error.
    #[error(transparent)]
    Rule(#[from] RuleError),
    /// Wrapped polyhedron error.
    #[error(transparent)]
    Polyhedron(#[from] PolyError),
}
