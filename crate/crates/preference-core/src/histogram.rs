//! Histograms (anonymised integer profiles) and weight tallies.

use crate::{ranking_table, Alternative, PrefError, Result, Weight};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Total multiplicity per ranking, indexed by the canonical ranking order.
///
/// Serialises as `{"m": 3, "counts": [..m!..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Histogram {
    m: usize,
    counts: Vec<u64>,
}

impl Histogram {
    /// Validates the length `m!` and wraps the counts.
    pub fn new(m: usize, counts: Vec<u64>) -> Result<Self> {
        let table = ranking_table(m)?;
        if counts.len() != table.len() {
            return Err(PrefError::LengthMismatch {
                expected: table.len(),
                found: counts.len(),
            });
        }
        Ok(Histogram { m, counts })
    }

    /// The all-zero histogram (empty profile).
    pub fn zeros(m: usize) -> Result<Self> {
        let q = ranking_table(m)?.len();
        Ok(Histogram {
            m,
            counts: vec![0; q],
        })
    }

    /// One vote per ranking.
    pub fn uniform(m: usize) -> Result<Self> {
        let q = ranking_table(m)?.len();
        Ok(Histogram {
            m,
            counts: vec![1; q],
        })
    }

    /// Parses the JSON form `{"m": .., "counts": [..]}` and validates it.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Histogram = serde_json::from_str(text).map_err(|e| PrefError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Histogram::new(raw.m, raw.counts)
    }

    /// JSON form `{"m": .., "counts": [..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("histogram serialises")
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Counts in canonical ranking order.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Mutable access to the count of ranking number `r`.
    pub fn count_mut(&mut self, r: usize) -> &mut u64 {
        &mut self.counts[r]
    }

    /// Number of voters.
    pub fn n(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Signed integer tally, the input type of every voting rule.
    pub fn tally(&self) -> Tally<i64> {
        Tally {
            m: self.m,
            weights: self.counts.iter().map(|&c| c as i64).collect(),
        }
    }

    /// Histogram of the profile obtained by relabelling each alternative `a`
    /// as `sigma[a]`.
    pub fn relabel(&self, sigma: &[Alternative]) -> Histogram {
        let table = ranking_table(self.m).expect("validated m");
        let mut counts = vec![0; self.counts.len()];
        for (r, &c) in self.counts.iter().enumerate() {
            if c > 0 {
                counts[table.rankings()[r].relabel(sigma).index()] += c;
            }
        }
        Histogram { m: self.m, counts }
    }

    /// Componentwise sum of two histograms over the same alternatives.
    pub fn add(&self, other: &Histogram) -> Result<Histogram> {
        if self.m != other.m {
            return Err(PrefError::MismatchedM(self.m, other.m));
        }
        Ok(Histogram {
            m: self.m,
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// Signed or fractional weights per ranking in canonical order; the common
/// input of voting rules, majority graphs and round scores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally<W> {
    m: usize,
    weights: Vec<W>,
}

impl<W: Weight> Tally<W> {
    /// Validates the length `m!` and wraps the weights.
    pub fn new(m: usize, weights: Vec<W>) -> Result<Self> {
        let table = ranking_table(m)?;
        if weights.len() != table.len() {
            return Err(PrefError::LengthMismatch {
                expected: table.len(),
                found: weights.len(),
            });
        }
        Ok(Tally { m, weights })
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Weights in canonical ranking order.
    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    /// Total weight.
    pub fn total(&self) -> W {
        self.weights.iter().cloned().fold(W::zero(), |a, b| a + b)
    }

    /// Tally of the relabelled profile (`a ↦ sigma[a]`).
    pub fn relabel(&self, sigma: &[Alternative]) -> Tally<W> {
        let table = ranking_table(self.m).expect("validated m");
        let mut weights = vec![W::zero(); self.weights.len()];
        for (r, w) in self.weights.iter().enumerate() {
            weights[table.rankings()[r].relabel(sigma).index()] += w.clone();
        }
        Tally { m: self.m, weights }
    }
}

impl Tally<BigRational> {
    /// Fractional tally from a rational vector (e.g. a distribution π).
    pub fn fractional(m: usize, weights: Vec<BigRational>) -> Result<Self> {
        Tally::new(m, weights)
    }
}

impl From<&Histogram> for Tally<i64> {
    fn from(h: &Histogram) -> Self {
        h.tally()
    }
}
