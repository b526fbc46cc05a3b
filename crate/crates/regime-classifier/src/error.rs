use preference_core::PrefError;
use rational_polyhedra::PolyError;
use thiserror::Error;
use tie_polyhedra::TieError;
use voting_rules::RuleError;

/// Errors raised by regime classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// The preference model is malformed.
    #[error("invalid model: {0}")]
    InvalidModel(String),
    /// The query parameters are out of range.
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    /// No decision procedure covers the query.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Wrapped tie-event error.
    #[error(transparent)]
    Tie(#[from] TieError),
    /// Wrapped rule error.
    #[error(transparent)]
    Rule(#[from] RuleError),
    /// Wrapped preference error.
    #[error(transparent)]
    Preference(#[from] PrefError),
    /// Wrapped polyhedron error.
    #[error(transparent)]
    Polyhedron(#[from] PolyError),
}
