//! H-representations `A x ≤ b` of the tie-event polyhedra.
//!
//! Equalities are written as a row together with its negation, both with
//! bound `0`. Strict inequalities use bound `−1`, which is exact because
//! every row is integral and histograms are integer points.

use crate::vectors::{difference, negated, pair_diff_vector, restricted_pair_vector, score_diff_vector};
use crate::TieError;
use preference_core::{factorial, Alternative, PalindromicOrder};
use rational_polyhedra::{qi, Polyhedron, Q};
use std::cmp::Ordering;
use voting_rules::{MRSERule, PUTStructure, ScoringVector, TotalPreorder};

#[derive(Default)]
struct Rows {
    a: Vec<Vec<i64>>,
    b: Vec<Q>,
}

impl Rows {
    fn equal(&mut self, row: Vec<i64>) {
        self.a.push(negated(&row));
        self.a.push(row);
        self.b.extend([qi(0), qi(0)]);
    }

    fn strict(&mut self, row: Vec<i64>) {
        self.a.push(row);
        self.b.push(qi(-1));
    }

    fn build(self, q: usize) -> Result<Polyhedron, TieError> {
        Ok(Polyhedron::new(q, self.a, self.b)?)
    }
}

/// `H^{s,T}`: histograms whose `s`-winners are exactly `winners`.
///
/// Rows `Score_{a,b} = 0` for `a, b ∈ T` and `Score_{a,b} ≤ −1` for
/// `a ∉ T`, `b ∈ T`.
pub fn scoring_tie_polyhedron(s: &ScoringVector, winners: &[Alternative]) -> Result<Polyhedron, TieError> {
    let m = s.len();
    let mask = subset_mask(m, winners)?;
    let mut rows = Rows::default();
    for &a in winners {
        for &b in winners {
            if a < b {
                rows.equal(score_diff_vector(s, a, b)?);
            }
        }
    }
    for a in (0..m).filter(|&a| mask >> a & 1 == 0) {
        for &b in winners {
            rows.strict(score_diff_vector(s, a, b)?);
        }
    }
    rows.build(factorial(m) as usize)
}

pub(crate) fn subset_mask(m: usize, set: &[Alternative]) -> Result<u64, TieError> {
    if set.is_empty() {
        return Err(TieError::InvalidSubset("empty set".into()));
    }
    let mut mask = 0u64;
    for &a in set {
        if a >= m {
            return Err(TieError::AlternativeOutOfRange { alternative: a + 1, m });
        }
        if mask >> a & 1 == 1 {
            return Err(TieError::SameAlternative(a + 1));
        }
        mask |= 1 << a;
    }
    Ok(mask)
}

/// `H^O`: histograms whose edge order is `o`.
///
/// Edges inside a tier have equal margins; each tier's margin exceeds the
/// next tier's by at least one. Comparing consecutive tiers through one
/// representative edge each is equivalent to the all-pairs description.
pub fn palindromic_polyhedron(o: &PalindromicOrder) -> Result<Polyhedron, TieError> {
    let m = o.m();
    let tiers = o.tiers();
    let mut rows = Rows::default();
    let mut reps = Vec::with_capacity(tiers.len());
    for tier in &tiers {
        let first = pair_diff_vector(m, tier[0].0, tier[0].1)?;
        for &(c, d) in &tier[1..] {
            rows.equal(difference(&pair_diff_vector(m, c, d)?, &first));
        }
        reps.push(first);
    }
    for w in reps.windows(2) {
        rows.strict(difference(&w[1], &w[0]));
    }
    rows.build(factorial(m) as usize)
}

fn preorder_rows(rows: &mut Rows, removed: u64, w: &TotalPreorder, rule: &MRSERule) -> Result<(), TieError> {
    let tiers = w.tiers();
    for tier in tiers {
        for &b in &tier[1..] {
            rows.equal(restricted_pair_vector(removed, b, tier[0], rule)?);
        }
    }
    for pair in tiers.windows(2) {
        rows.strict(restricted_pair_vector(removed, pair[1][0], pair[0][0], rule)?);
    }
    Ok(())
}

/// `H^W`: histograms whose PUT structure under `rule` is `w`.
///
/// For every removed set `B` with at least two alternatives left, round
/// scores are equal within each tier of `W(B)` and drop by at least one
/// between consecutive tiers.
pub fn put_polyhedron(w: &PUTStructure, rule: &MRSERule) -> Result<Polyhedron, TieError> {
    let m = w.m();
    if rule.m() != m {
        return Err(TieError::LengthMismatch {
            expected: m,
            found: rule.m(),
        });
    }
    let mut rows = Rows::default();
    for (removed, entry) in w.entries().iter().enumerate() {
        if m - (removed as u64).count_ones() as usize >= 2 {
            preorder_rows(&mut rows, removed as u64, entry, rule)?;
        }
    }
    rows.build(factorial(m) as usize)
}

/// Signature polyhedron of a generalised irresolute scoring rule: for each
/// hyperplane `h_j` with sign `t_j`, the constraint `x·h_j ≥ 1` (`Greater`),
/// `x·h_j = 0` (`Equal`) or `x·h_j ≤ −1` (`Less`).
pub fn gisr_signature_polyhedron(hyperplanes: &[Vec<i64>], signs: &[Ordering]) -> Result<Polyhedron, TieError> {
    if hyperplanes.len() != signs.len() {
        return Err(TieError::LengthMismatch {
            expected: hyperplanes.len(),
            found: signs.len(),
        });
    }
    let Some(first) = hyperplanes.first() else {
        return Err(TieError::InvalidSubset("no hyperplanes".into()));
    };
    let q = first.len();
    let mut rows = Rows::default();
    for (h, sign) in hyperplanes.iter().zip(signs) {
        if h.len() != q {
            return Err(TieError::LengthMismatch {
                expected: q,
                found: h.len(),
            });
        }
        match sign {
            Ordering::Greater => rows.strict(negated(h)),
            Ordering::Equal => rows.equal(h.clone()),
            Ordering::Less => rows.strict(h.clone()),
        }
    }
    rows.build(q)
}
