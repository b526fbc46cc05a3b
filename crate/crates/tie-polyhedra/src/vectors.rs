//! Integer row vectors over the `m!` histogram coordinates.
//!
//! Each vector `v` is indexed by canonical ranking number, so `v · Hist(P)`
//! is a score difference, a pairwise margin or a round-score difference of
//! the profile `P`.

use crate::TieError;
use preference_core::{ranking_table, Alternative};
use voting_rules::{MRSERule, ScoringVector};

fn check_pair(m: usize, a: Alternative, b: Alternative) -> Result<(), TieError> {
    for x in [a, b] {
        if x >= m {
            return Err(TieError::AlternativeOutOfRange { alternative: x + 1, m });
        }
    }
    if a == b {
        return Err(TieError::SameAlternative(a + 1));
    }
    Ok(())
}

/// `Score_{a,b}`: per ranking, `s(rank of a) − s(rank of b)`.
pub fn score_diff_vector(s: &ScoringVector, a: Alternative, b: Alternative) -> Result<Vec<i64>, TieError> {
    let m = s.len();
    check_pair(m, a, b)?;
    let table = ranking_table(m)?;
    Ok((0..table.len())
        .map(|r| s.score(table.position(r, a)) - s.score(table.position(r, b)))
        .collect())
}

/// `Pair_{a,b}`: `+1` on rankings with `a ≻ b`, `−1` otherwise. Its dot
/// product with a histogram is the majority margin `w(a, b)`.
pub fn pair_diff_vector(m: usize, a: Alternative, b: Alternative) -> Result<Vec<i64>, TieError> {
    check_pair(m, a, b)?;
    let table = ranking_table(m)?;
    Ok((0..table.len())
        .map(|r| if table.position(r, a) < table.position(r, b) { 1 } else { -1 })
        .collect())
}

/// `Pair_{B,a,b}`: per ranking, the difference between the round scores of
/// `a` and `b` once the alternatives in `removed` are deleted.
pub fn restricted_pair_vector(
    removed: u64,
    a: Alternative,
    b: Alternative,
    rule: &MRSERule,
) -> Result<Vec<i64>, TieError> {
    let m = rule.m();
    check_pair(m, a, b)?;
    if removed >> m != 0 {
        return Err(TieError::InvalidSubset(format!("mask {removed:#b} exceeds m={m}")));
    }
    for x in [a, b] {
        if removed >> x & 1 == 1 {
            return Err(TieError::InvalidSubset(format!("alternative {} is removed", x + 1)));
        }
    }
    let table = ranking_table(m)?;
    Ok(table
        .rankings()
        .iter()
        .map(|r| rule.ranking_score(r, removed, a) - rule.ranking_score(r, removed, b))
        .collect())
}

pub(crate) fn negated(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

pub(crate) fn difference(u: &[i64], v: &[i64]) -> Vec<i64> {
    u.iter().zip(v).map(|(x, y)| x - y).collect()
}

/// Dot product of an integer row with a histogram.
pub fn dot(row: &[i64], counts: &[u64]) -> i64 {
    row.iter().zip(counts).map(|(&a, &c)| a * c as i64).sum()
}
