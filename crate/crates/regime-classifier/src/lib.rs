//! Decision procedures for the asymptotic likelihood of polyhedral events
//! — in particular "exactly `k` winners" — when each of `n` agents draws a
//! ranking from an adversarially chosen distribution in a finite family.
//!
//! The answer is one of three regimes: exactly zero, `exp(−Θ(n))`, or
//! `Θ(n^e)` with `e = (dim − q)/2` set by the largest activated
//! characteristic cone. Closed forms for the named rules are provided
//! separately and cross-checked against the polyhedral procedure.

mod closed;
mod error;
mod generic;
mod model;
mod regime;
mod validate;

pub use closed::{closed_form_regime, l_alpha, scoring_tie_possible, SCORE_DP_CAP};
pub use error::ClassifyError;
pub use generic::{classify_polyhedron, classify_ties, classify_union, classify_union_with_grid, DEFAULT_MIN_GRID};
pub use model::{parse_rational, parse_rational_str, ModelSpec};
pub use regime::{Adversary, Regime, RegimeKind};
pub use validate::{cross_validate, regimes_agree, table_grid, CrossValidation, GRID_RULES};
