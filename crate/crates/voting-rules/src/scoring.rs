//! Integer positional scoring rules.

use crate::{RuleError, WinnerSet};
use preference_core::{ranking_table, Tally, Weight};
use std::fmt;

/// Integer scoring vector `s_1 ≥ … ≥ s_m` with `s_1 > s_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoringVector(Vec<i64>);

impl ScoringVector {
    /// Validates monotonicity and non-constancy.
    pub fn new(entries: Vec<i64>) -> Result<Self, RuleError> {
        if entries.len() < 2 {
            return Err(RuleError::InvalidScoringVector(format!(
                "{entries:?} has fewer than two entries"
            )));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(RuleError::InvalidScoringVector(format!(
                "{entries:?} is not weakly decreasing"
            )));
        }
        if entries[0] == entries[entries.len() - 1] {
            return Err(RuleError::InvalidScoringVector(format!(
                "{entries:?} is constant"
            )));
        }
        Ok(ScoringVector(entries))
    }

    /// `(1, 0, …, 0)`.
    pub fn plurality(m: usize) -> Self {
        let mut v = vec![0; m];
        v[0] = 1;
        ScoringVector(v)
    }

    /// `(m−1, m−2, …, 0)`.
    pub fn borda(m: usize) -> Self {
        ScoringVector((0..m as i64).rev().collect())
    }

    /// `(1, …, 1, 0)`.
    pub fn veto(m: usize) -> Self {
        let mut v = vec![1; m];
        v[m - 1] = 0;
        ScoringVector(v)
    }

    /// Number of positions.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false (at least two entries).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Score for rank position `pos` (`0` = top).
    #[inline]
    pub fn score(&self, pos: usize) -> i64 {
        self.0[pos]
    }

    /// Entries top to bottom.
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for ScoringVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", e.join(","))
    }
}

/// Total score of every alternative.
pub fn scoring_scores<W: Weight>(t: &Tally<W>, s: &ScoringVector) -> Result<Vec<W>, RuleError> {
    let m = t.m();
    if s.len() != m {
        return Err(RuleError::LengthMismatch {
            expected: m,
            found: s.len(),
        });
    }
    let table = ranking_table(m)?;
    let mut scores = vec![W::zero(); m];
    for (r, w) in t.weights().iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        for (a, &pos) in table.positions_of(r).iter().enumerate() {
            let sc = s.score(pos as usize);
            if sc != 0 {
                scores[a] += w.clone() * W::from_int(sc);
            }
        }
    }
    Ok(scores)
}

/// Alternatives with maximum total score.
pub fn scoring_winners<W: Weight>(t: &Tally<W>, s: &ScoringVector) -> Result<WinnerSet, RuleError> {
    let scores = scoring_scores(t, s)?;
    Ok(WinnerSet::argmax(t.m(), |a| scores[a].clone()))
}
