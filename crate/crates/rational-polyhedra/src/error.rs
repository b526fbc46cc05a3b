use thiserror::Error;

/// Errors raised by polyhedral operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// A matrix or vector has inconsistent dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A polyhedron needs at least one row and one column.
    #[error("a polyhedron needs at least one row and one column")]
    Empty,
    /// The all-ones row lies in the span of the implicit equalities.
    #[error("the all-ones row is linearly dependent on the implicit equalities")]
    OnesRowDependent,
    /// A rational literal could not be parsed.
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    /// Malformed JSON input.
    #[error("invalid polyhedron JSON: {0}")]
    Json(String),
    /// A point list was empty where at least one point is required.
    #[error("the point family is empty")]
    NoPoints,
}
