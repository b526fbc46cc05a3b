use thiserror::Error;

/// Errors raised by preference-core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrefError {
    /// The number of alternatives is outside the range supported by
    /// histogram-indexed structures.
    #[error("number of alternatives m={0} is outside the supported range 2..=6")]
    UnsupportedM(usize),
    /// A ranking is not a permutation of `0..m`.
    #[error("invalid ranking: {0}")]
    InvalidRanking(String),
    /// An ordinary profile carries a weight that is not a nonnegative integer.
    #[error("weight {0} is not a nonnegative integer")]
    NonIntegralWeight(String),
    /// An operation on a pair of alternatives received the same alternative twice.
    #[error("alternatives must be distinct (got {0} twice)")]
    SameAlternative(usize),
    /// An alternative index is outside `0..m`.
    #[error("alternative {alternative} is out of range for m={m}")]
    AlternativeOutOfRange { alternative: usize, m: usize },
    /// A restriction would remove every alternative.
    #[error("cannot remove every alternative")]
    RemoveAll,
    /// A histogram or weight vector has the wrong length.
    #[error("expected a vector of length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    /// A profile and a target disagree on the number of alternatives.
    #[error("mismatched number of alternatives: {0} vs {1}")]
    MismatchedM(usize, usize),
    /// A palindromic order violates its structural invariants.
    #[error("invalid palindromic order: {0}")]
    InvalidOrder(String),
    /// An odd number of voters cannot realise a nonempty middle tier.
    #[error("an odd number of voters ({0}) cannot produce zero-weight edges")]
    ParityMismatch(u64),
    /// The requested number of voters is below the proven construction bound.
    #[error("n={n} is below the construction bound {bound}")]
    TooFewVoters { n: u64, bound: u64 },
    /// Malformed text input.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
