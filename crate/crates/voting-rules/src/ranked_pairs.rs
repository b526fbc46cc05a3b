//! Ranked pairs with parallel-universes tie-breaking.
//!
//! Majority edges are fixed in non-increasing weight order, skipping any
//! edge that would close a cycle; an alternative wins if some ordering of
//! the equal-weight edges leaves it without incoming edges. Orderings are
//! explored tier by tier with memoisation on the transitive closure of the
//! fixed edges, which is all that later decisions depend on.
//!
//! Only positive-margin edges are fixed. Fixing a negative edge `b → a`
//! can never change the outcome (it is only acyclic when `b` already
//! reaches `a`), and fixing zero-margin pairs last in either direction
//! yields the same union of winners, so this convention is without loss.

use crate::{RuleError, WinnerSet};
use preference_core::{weighted_majority_graph, Alternative, Tally, Weight, WeightedMajorityGraph};
use std::collections::HashMap;

/// Largest number of alternatives for exhaustive tie-breaking.
pub const MAX_RANKED_PAIRS_M: usize = 8;

/// Reachability rows packed as bytes: bit `b` of byte `a` is set iff `a`
/// reaches `b` through fixed edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Closure(u64);

impl Closure {
    #[inline]
    fn row(self, a: usize) -> u64 {
        self.0 >> (8 * a) & 0xff
    }

    #[inline]
    fn reaches(self, a: usize, b: usize) -> bool {
        self.row(a) >> b & 1 == 1
    }

    /// Adds `a → b` unless it closes a cycle; returns the new closure.
    #[inline]
    fn fix(self, m: usize, (a, b): (Alternative, Alternative)) -> Option<Closure> {
        if self.reaches(b, a) {
            return None;
        }
        let targets = self.row(b) | 1 << b;
        let mut out = self.0;
        for x in 0..m {
            if x == a || self.reaches(x, a) {
                out |= targets << (8 * x);
            }
        }
        Some(Closure(out))
    }

    fn sources(self, m: usize) -> u64 {
        let reached = (0..m).fold(0u64, |acc, x| acc | self.row(x));
        ((1u64 << m) - 1) & !reached
    }
}

struct Search<'a> {
    m: usize,
    tiers: &'a [Vec<(Alternative, Alternative)>],
    memo: HashMap<(usize, u64, Closure), u64>,
}

impl Search<'_> {
    fn full(&self, tier: usize) -> u64 {
        (1u64 << self.tiers[tier].len()) - 1
    }

    fn run(&mut self, tier: usize, remaining: u64, closure: Closure) -> u64 {
        if tier == self.tiers.len() {
            return closure.sources(self.m);
        }
        if remaining == 0 {
            let next = tier + 1;
            let rem = if next < self.tiers.len() { self.full(next) } else { 0 };
            return self.run(next, rem, closure);
        }
        let key = (tier, remaining, closure);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let edges = &self.tiers[tier];
        // If every remaining edge can be fixed in one sweep, the result is
        // order independent: a subgraph of an acyclic graph stays acyclic.
        let mut sweep = Some(closure);
        for (i, &e) in edges.iter().enumerate() {
            if remaining >> i & 1 == 1 {
                sweep = sweep.and_then(|c| c.fix(self.m, e));
            }
        }
        let result = if let Some(c) = sweep {
            self.run(tier, 0, c)
        } else {
            let mut acc = 0;
            for (i, &e) in edges.iter().enumerate() {
                if remaining >> i & 1 == 0 {
                    continue;
                }
                let next = closure.fix(self.m, e).unwrap_or(closure);
                acc |= self.run(tier, remaining & !(1 << i), next);
            }
            acc
        };
        self.memo.insert(key, result);
        result
    }
}

/// Ranked-pairs winners of a weighted majority graph under PUT.
pub fn ranked_pairs_winners_graph<W: Weight>(g: &WeightedMajorityGraph<W>) -> Result<WinnerSet, RuleError> {
    let m = g.m();
    if m > MAX_RANKED_PAIRS_M {
        return Err(RuleError::TooManyAlternatives {
            m,
            max: MAX_RANKED_PAIRS_M,
        });
    }
    let mut edges: Vec<(W, Alternative, Alternative)> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a != b && g.weight(a, b).is_positive() {
                edges.push((g.weight(a, b).clone(), a, b));
            }
        }
    }
    edges.sort_by(|x, y| y.0.cmp(&x.0));
    let mut tiers: Vec<Vec<(Alternative, Alternative)>> = Vec::new();
    let mut last: Option<W> = None;
    for (w, a, b) in edges {
        if last.as_ref() != Some(&w) {
            tiers.push(Vec::new());
            last = Some(w);
        }
        tiers.last_mut().expect("pushed").push((a, b));
    }
    let mut search = Search {
        m,
        tiers: &tiers,
        memo: HashMap::new(),
    };
    let start = if tiers.is_empty() { 0 } else { search.full(0) };
    Ok(WinnerSet::from_mask(search.run(0, start, Closure(0))))
}

/// Ranked-pairs winners of a profile under PUT.
pub fn ranked_pairs_winners<W: Weight>(t: &Tally<W>) -> Result<WinnerSet, RuleError> {
    ranked_pairs_winners_graph(&weighted_majority_graph(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(m: usize, w: impl Fn(usize, usize) -> i64) -> WeightedMajorityGraph<i64> {
        WeightedMajorityGraph::from_upper(m, w)
    }

    #[test]
    fn distinct_weights_give_one_winner() {
        // 1→2 (5), 2→3 (3), 3→1 (1): the weakest cycle edge is dropped.
        let g = graph(3, |a, b| match (a, b) {
            (0, 1) => 5,
            (1, 2) => 3,
            (0, 2) => -1,
            _ => unreachable!(),
        });
        assert_eq!(ranked_pairs_winners_graph(&g).unwrap().alternatives(), &[0]);
    }

    #[test]
    fn equal_weight_cycle_lets_everyone_win() {
        let g = graph(3, |a, b| if (a, b) == (0, 2) { -1 } else { 1 });
        assert_eq!(ranked_pairs_winners_graph(&g).unwrap().len(), 3);
    }

    #[test]
    fn all_zero_graph_ties_everyone() {
        let g = graph(4, |_, _| 0);
        assert_eq!(ranked_pairs_winners_graph(&g).unwrap().len(), 4);
    }

    #[test]
    fn size_guard() {
        let g = graph(9, |_, _| 1);
        assert!(ranked_pairs_winners_graph(&g).is_err());
    }
}
