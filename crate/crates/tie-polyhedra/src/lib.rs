//! Tie events of irresolute voting rules as finite unions of integer
//! polyhedra over the `m!`-dimensional histogram space.
//!
//! A profile has exactly `k` winners iff its histogram lies in one of the
//! constituent polyhedra of the event: one per winner set for scoring
//! rules, one per edge order for edge-order rules and one per PUT
//! structure for multi-round elimination rules. The characteristic cone of
//! each constituent has dimension `m!` minus the constituent's tie count,
//! which is what sets polynomial exponents.

mod enumerate;
mod error;
mod event;
mod polyhedra;
mod vectors;

pub use enumerate::{enumerate_palindromic_orders, visit_palindromic_orders, MAX_ENUMERATION_M};
pub use error::TieError;
pub use event::{ell_min, tie_event, w_min, Constituent, MinTies, Parity, Structure, TieEvent, MAX_MRSE_EVENT_M};
pub use polyhedra::{gisr_signature_polyhedron, palindromic_polyhedron, put_polyhedron, scoring_tie_polyhedron};
pub use vectors::{dot, pair_diff_vector, restricted_pair_vector, score_diff_vector};
