//! Canonical representations of rankings, profiles, histograms and majority
//! graphs, plus constructive profile synthesis.
//!
//! Alternatives are `0`-based indices internally (`0..m`). Every textual
//! format (profile files, palindromic-order strings, `Display` impls) uses
//! the conventional `1`-based labels.
//!
//! The histogram index of a ranking is its position in the lexicographic
//! enumeration of all `m!` permutations; this order is part of the file
//! formats and never changes.

mod error;
mod histogram;
mod majority;
mod mcgarvey;
mod order;
mod profile;
mod ranking;
mod weight;

pub use error::PrefError;
pub use histogram::{Histogram, Tally};
pub use majority::{
    pairwise_margin, unweighted_majority_graph, weighted_majority_graph,
    UnweightedMajorityGraph, WeightedMajorityGraph,
};
pub use mcgarvey::{mcgarvey_profile, mcgarvey_weights};
pub use order::{edge_order, Edge, PalindromicOrder};
pub use profile::{restrict_profile, Profile, RestrictedProfile};
pub use ranking::{
    enumerate_rankings, factorial, ranking_table, Ranking, RankingTable, MAX_HISTOGRAM_M,
    MIN_M,
};
pub use weight::Weight;

/// A `0`-based alternative index.
pub type Alternative = usize;

/// Convenience alias for results of this crate.
pub type Result<T> = std::result::Result<T, PrefError>;
