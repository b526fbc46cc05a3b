//! Irresolute voting rules: positional scoring, Copeland_α, maximin,
//! Schulze, ranked pairs and multi-round elimination (STV, Coombs,
//! Baldwin), with parallel-universes tie-breaking wherever a rule breaks
//! ties internally.
//!
//! Every rule works on a [`Tally`](preference_core::Tally) of any exact
//! [`Weight`](preference_core::Weight) type, so the same code evaluates
//! integer histograms and fractional (distribution-valued) profiles.

mod error;
mod majority;
mod mrse;
mod preorder;
mod ranked_pairs;
mod rule;
mod scoring;
mod winners;

pub use error::RuleError;
pub use majority::{
    copeland_scaled_scores, copeland_winners, copeland_winners_graph, maximin_scores,
    maximin_winners, maximin_winners_graph, schulze_strengths, schulze_winners,
    schulze_winners_graph, CopelandAlpha,
};
pub use mrse::{
    mrse_major_component, mrse_winners, put_structure, round_scores, MRSERule, MajorComponent,
    PUTStructure,
};
pub use preorder::TotalPreorder;
pub use ranked_pairs::{ranked_pairs_winners, ranked_pairs_winners_graph, MAX_RANKED_PAIRS_M};
pub use rule::{eo_rule_winners, RuleId, RuleKind};
pub use scoring::{scoring_scores, scoring_winners, ScoringVector};
pub use winners::WinnerSet;
