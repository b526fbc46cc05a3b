//! Rules that depend only on the weighted majority graph: Copeland_α,
//! maximin and Schulze.

use crate::{RuleError, WinnerSet};
use num_rational::Rational64;
use num_traits::{One, Zero};
use preference_core::{
    unweighted_majority_graph, weighted_majority_graph, Tally, Weight, WeightedMajorityGraph,
};
use std::fmt;
use std::str::FromStr;

/// Copeland tie credit `α ∈ [0, 1]`, rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CopelandAlpha(Rational64);

impl CopelandAlpha {
    /// Validates `0 ≤ α ≤ 1`.
    pub fn new(alpha: Rational64) -> Result<Self, RuleError> {
        if alpha < Rational64::zero() || alpha > Rational64::one() {
            return Err(RuleError::InvalidAlpha(alpha.to_string()));
        }
        Ok(CopelandAlpha(alpha))
    }

    /// `p/q`.
    pub fn ratio(p: i64, q: i64) -> Result<Self, RuleError> {
        if q == 0 {
            return Err(RuleError::InvalidAlpha(format!("{p}/{q}")));
        }
        Self::new(Rational64::new(p, q))
    }

    /// The value.
    pub fn value(&self) -> Rational64 {
        self.0
    }
}

impl fmt::Display for CopelandAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for CopelandAlpha {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, RuleError> {
        let bad = || RuleError::InvalidAlpha(s.to_string());
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => (s.parse().map_err(|_| bad())?, 1),
        };
        Self::ratio(p, q).map_err(|_| bad())
    }
}

/// Copeland_α scores scaled by the denominator of α, so that they are
/// integers: `den·wins + num·ties`.
pub fn copeland_scaled_scores<W: Weight>(g: &WeightedMajorityGraph<W>, alpha: CopelandAlpha) -> Vec<i64> {
    let umg = unweighted_majority_graph(g);
    let (num, den) = (*alpha.0.numer(), *alpha.0.denom());
    (0..g.m())
        .map(|a| den * umg.wins(a) as i64 + num * umg.ties(a) as i64)
        .collect()
}

/// Copeland_α winners of a weighted majority graph.
pub fn copeland_winners_graph<W: Weight>(g: &WeightedMajorityGraph<W>, alpha: CopelandAlpha) -> WinnerSet {
    let s = copeland_scaled_scores(g, alpha);
    WinnerSet::argmax(g.m(), |a| s[a])
}

/// Copeland_α winners of a profile.
pub fn copeland_winners<W: Weight>(t: &Tally<W>, alpha: CopelandAlpha) -> WinnerSet {
    copeland_winners_graph(&weighted_majority_graph(t), alpha)
}

/// Maximin score `min_{b ≠ a} w(a, b)` of every alternative.
pub fn maximin_scores<W: Weight>(g: &WeightedMajorityGraph<W>) -> Vec<W> {
    let m = g.m();
    (0..m)
        .map(|a| {
            (0..m)
                .filter(|&b| b != a)
                .map(|b| g.weight(a, b).clone())
                .min()
                .expect("m ≥ 2")
        })
        .collect()
}

/// Maximin winners of a weighted majority graph.
pub fn maximin_winners_graph<W: Weight>(g: &WeightedMajorityGraph<W>) -> WinnerSet {
    let s = maximin_scores(g);
    WinnerSet::argmax(g.m(), |a| s[a].clone())
}

/// Maximin winners of a profile.
pub fn maximin_winners<W: Weight>(t: &Tally<W>) -> WinnerSet {
    maximin_winners_graph(&weighted_majority_graph(t))
}

/// Strongest-path strengths `s[a][b]`: the largest bottleneck weight over
/// directed paths from `a` to `b` in the complete weighted majority graph.
///
/// Negative margins are kept as ordinary edge weights. Whenever either of
/// `s[a][b]`, `s[b][a]` is positive the comparison is the one of the
/// positive-margin formulation; otherwise both are zero (a tied pair).
pub fn schulze_strengths<W: Weight>(g: &WeightedMajorityGraph<W>) -> Vec<Vec<W>> {
    let m = g.m();
    let mut p: Vec<Vec<W>> = (0..m)
        .map(|a| (0..m).map(|b| if a == b { W::zero() } else { g.weight(a, b).clone() }).collect())
        .collect();
    for k in 0..m {
        for i in 0..m {
            if i == k {
                continue;
            }
            for j in 0..m {
                if j == i || j == k {
                    continue;
                }
                let via = std::cmp::min(&p[i][k], &p[k][j]).clone();
                if via > p[i][j] {
                    p[i][j] = via;
                }
            }
        }
    }
    p
}

/// Schulze winners: alternatives `a` with `s[a][b] ≥ s[b][a]` for every `b`,
/// i.e. the maximal elements of the strict relation `s[a][b] > s[b][a]`.
///
/// The strict relation is transitive, so this set is nonempty; the weak
/// relation `s[a][b] ≥ s[b][a]` need not be transitive, so "top tier" is
/// understood as the set of alternatives nobody beats strictly.
pub fn schulze_winners_graph<W: Weight>(g: &WeightedMajorityGraph<W>) -> WinnerSet {
    let m = g.m();
    let s = schulze_strengths(g);
    WinnerSet::new((0..m).filter(|&a| (0..m).all(|b| a == b || s[a][b] >= s[b][a])))
}

/// Schulze winners of a profile.
pub fn schulze_winners<W: Weight>(t: &Tally<W>) -> WinnerSet {
    schulze_winners_graph(&weighted_majority_graph(t))
}
