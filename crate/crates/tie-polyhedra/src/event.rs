//! Tie events as finite unions of polyhedra, and the minimum tie count over
//! the constituents a preference model can activate.

use crate::enumerate::{visit_palindromic_orders, MAX_ENUMERATION_M};
use crate::polyhedra::{palindromic_polyhedron, put_polyhedron, scoring_tie_polyhedron};
use crate::TieError;
use preference_core::{factorial, Alternative, PalindromicOrder, MAX_HISTOGRAM_M};
use rational_polyhedra::{hull_intersects_cone, integer_slice_nonempty, Polyhedron, SliceDecision, Q};
use serde_json::{json, Value};
use std::fmt;
use std::sync::OnceLock;
use voting_rules::{PUTStructure, RuleId, RuleKind, WinnerSet};

/// Largest `m` for which elimination-rule events are enumerated.
pub const MAX_MRSE_EVENT_M: usize = 3;

/// Parity of the number of agents, which restricts the admissible edge
/// orders (odd `n` forces an empty middle tier).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Even `n`.
    Even,
    /// Odd `n`.
    Odd,
    /// No restriction.
    Any,
}

impl Parity {
    /// Parity of `n`.
    pub fn of(n: u64) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Any => "any",
        })
    }
}

/// The combinatorial object that generates a constituent polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// Winner set `T` of a scoring rule.
    Winners(Vec<Alternative>),
    /// Edge order `O`.
    Order(PalindromicOrder),
    /// PUT structure `W`.
    Put(PUTStructure),
}

impl Structure {
    /// Provenance label, e.g. `T: {1,2}` or `O: T1={(1,2)}|…`.
    pub fn label(&self) -> String {
        match self {
            Structure::Winners(t) => {
                let l: Vec<String> = t.iter().map(|a| (a + 1).to_string()).collect();
                format!("T: {{{}}}", l.join(","))
            }
            Structure::Order(o) => o.provenance(),
            Structure::Put(w) => format!("W: {w}"),
        }
    }
}

/// One polyhedron of a tie event with the structure that generated it.
#[derive(Debug)]
pub struct Constituent {
    /// Generating structure.
    pub structure: Structure,
    /// `|T| − 1`, `Ties(O)` or `Ties(W)`; the polyhedron's characteristic
    /// cone has dimension `m! − ties`.
    pub ties: usize,
    polyhedron: OnceLock<Polyhedron>,
}

impl Constituent {
    fn new(structure: Structure, ties: usize) -> Self {
        Constituent {
            structure,
            ties,
            polyhedron: OnceLock::new(),
        }
    }
}

/// Outcome of the minimum-ties search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinTies {
    /// The least-tied activated constituent.
    Found {
        /// Index into [`TieEvent::constituents`].
        index: usize,
        /// Its tie count.
        ties: usize,
    },
    /// No constituent is both realizable at `n` and met by the hull.
    NoneActivated,
    /// An integer-slice query hit its node cap before the answer was known.
    Undecided,
}

/// `{x : |r(x)| = k}` as a finite union of polyhedra in `ℝ^{m!}`.
///
/// Constituents are sorted by ascending tie count, i.e. descending cone
/// dimension. Polyhedra are built on first use.
#[derive(Debug)]
pub struct TieEvent {
    rule: RuleId,
    m: usize,
    k: usize,
    parity: Parity,
    constituents: Vec<Constituent>,
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<Alternative>> {
    (0u64..1 << m)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..m).filter(|&a| s >> a & 1 == 1).collect())
        .collect()
}

/// Builds the tie event "exactly `k` winners under `rule` with `m`
/// alternatives". For edge-order rules and odd `parity`, orders with a
/// nonempty middle tier are dropped (they have no odd-`n` histograms).
///
/// Size guards: scoring rules `m ≤ 6`, edge-order rules `m ≤ 4`,
/// elimination rules `m ≤ 3`.
pub fn tie_event(rule: &RuleId, m: usize, k: usize, parity: Parity) -> Result<TieEvent, TieError> {
    if k == 0 || k > m {
        return Err(TieError::InvalidK { k, m });
    }
    let mut constituents = Vec::new();
    match rule.kind() {
        RuleKind::Scoring => {
            if m > MAX_HISTOGRAM_M {
                return Err(TieError::SizeGuard {
                    what: "scoring tie events",
                    m,
                    max: MAX_HISTOGRAM_M,
                });
            }
            rule.scoring_vector(m)?;
            for t in k_subsets(m, k) {
                constituents.push(Constituent::new(Structure::Winners(t), k - 1));
            }
        }
        RuleKind::EdgeOrder => {
            if m > MAX_ENUMERATION_M {
                return Err(TieError::SizeGuard {
                    what: "edge-order tie events",
                    m,
                    max: MAX_ENUMERATION_M,
                });
            }
            let mut failure = None;
            visit_palindromic_orders(m, parity == Parity::Odd, |o| match rule.winners_eo(&o) {
                Ok(w) if w.len() == k => {
                    let ties = o.ties();
                    constituents.push(Constituent::new(Structure::Order(o), ties));
                }
                Ok(_) => {}
                Err(e) => failure = Some(e),
            })?;
            if let Some(e) = failure {
                return Err(e.into());
            }
        }
        RuleKind::Mrse => {
            if m > MAX_MRSE_EVENT_M {
                return Err(TieError::SizeGuard {
                    what: "elimination-rule tie events",
                    m,
                    max: MAX_MRSE_EVENT_M,
                });
            }
            rule.mrse_rule(m)?;
            for w in PUTStructure::enumerate(m)? {
                if w.major_component().winners.len() == k {
                    let ties = w.ties();
                    constituents.push(Constituent::new(Structure::Put(w), ties));
                }
            }
        }
    }
    constituents.sort_by_key(|c| c.ties);
    Ok(TieEvent {
        rule: rule.clone(),
        m,
        k,
        parity,
        constituents,
    })
}

impl TieEvent {
    /// Rule identifier.
    pub fn rule(&self) -> &RuleId {
        &self.rule
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Target number of winners.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Ambient dimension `m!`.
    pub fn q(&self) -> usize {
        factorial(self.m) as usize
    }

    /// Parity filter the event was built with.
    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Constituents, ascending by tie count.
    pub fn constituents(&self) -> &[Constituent] {
        &self.constituents
    }

    /// Number of constituents.
    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    /// Whether the event has no constituents.
    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }

    /// Polyhedron of constituent `i`, built on first use.
    pub fn polyhedron(&self, i: usize) -> Result<&Polyhedron, TieError> {
        let c = &self.constituents[i];
        if let Some(h) = c.polyhedron.get() {
            return Ok(h);
        }
        let h = match &c.structure {
            Structure::Winners(t) => scoring_tie_polyhedron(&self.rule.scoring_vector(self.m)?, t)?,
            Structure::Order(o) => palindromic_polyhedron(o)?,
            Structure::Put(w) => put_polyhedron(w, &self.rule.mrse_rule(self.m)?)?,
        };
        Ok(c.polyhedron.get_or_init(|| h))
    }

    /// Whether constituent `i` has an integer point with coordinate sum `n`
    /// (`None` when undecided).
    ///
    /// Edge orders at `n ≥ m⁴` are decided by parity alone: every order is
    /// realizable at even `n` and exactly the empty-middle orders at odd
    /// `n`. All other cases solve the integer slice exactly.
    pub fn realizable(&self, i: usize, n: u64) -> Result<Option<bool>, TieError> {
        if let Structure::Order(o) = &self.constituents[i].structure {
            if n >= (self.m as u64).pow(4) {
                return Ok(Some(n % 2 == 0 || o.middle().is_empty()));
            }
        }
        Ok(integer_slice_nonempty(self.polyhedron(i)?, n).decided())
    }

    /// A histogram with `n` agents in constituent `i`, when one exists.
    pub fn witness(&self, i: usize, n: u64) -> Result<Option<Vec<u64>>, TieError> {
        Ok(match integer_slice_nonempty(self.polyhedron(i)?, n) {
            SliceDecision::Feasible(x) => Some(x),
            _ => None,
        })
    }

    /// Whether some constituent is realizable at `n` (`None` when undecided).
    pub fn any_realizable(&self, n: u64) -> Result<Option<bool>, TieError> {
        let mut undecided = false;
        for i in 0..self.len() {
            match self.realizable(i, n)? {
                Some(true) => return Ok(Some(true)),
                Some(false) => {}
                None => undecided = true,
            }
        }
        Ok(if undecided { None } else { Some(false) })
    }

    /// Whether the convex hull of `hull` meets the characteristic cone of
    /// constituent `i`.
    pub fn hull_meets_cone(&self, i: usize, hull: &[Vec<Q>]) -> Result<bool, TieError> {
        Ok(hull_intersects_cone(hull, self.polyhedron(i)?.a())?)
    }

    /// Minimum tie count over constituents that are realizable at `n` and
    /// whose characteristic cone meets the convex hull of `hull`: `ℓ_min`
    /// for edge-order rules, `w_min` for elimination rules and `k − 1` for
    /// scoring rules.
    pub fn min_ties(&self, hull: &[Vec<Q>], n: u64) -> Result<MinTies, TieError> {
        let mut undecided = false;
        for i in 0..self.len() {
            if !self.hull_meets_cone(i, hull)? {
                continue;
            }
            match self.realizable(i, n)? {
                Some(true) => {
                    return Ok(if undecided {
                        MinTies::Undecided
                    } else {
                        MinTies::Found {
                            index: i,
                            ties: self.constituents[i].ties,
                        }
                    })
                }
                Some(false) => {}
                None => undecided = true,
            }
        }
        Ok(if undecided { MinTies::Undecided } else { MinTies::NoneActivated })
    }

    /// Index of the constituent containing `x`, if any.
    pub fn locate(&self, x: &[i64]) -> Result<Option<usize>, TieError> {
        for i in 0..self.len() {
            if self.polyhedron(i)?.contains(x) {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Winner set a constituent stands for.
    pub fn winners_of(&self, i: usize) -> Result<WinnerSet, TieError> {
        Ok(match &self.constituents[i].structure {
            Structure::Winners(t) => WinnerSet::new(t.iter().copied()),
            Structure::Order(o) => self.rule.winners_eo(o)?,
            Structure::Put(w) => w.major_component().winners,
        })
    }

    /// JSON list of constituents with provenance labels and polyhedra.
    pub fn to_json(&self) -> Result<Value, TieError> {
        let mut list = Vec::with_capacity(self.len());
        for (i, c) in self.constituents.iter().enumerate() {
            list.push(json!({
                "provenance": c.structure.label(),
                "ties": c.ties,
                "polyhedron": self.polyhedron(i)?.to_json(),
            }));
        }
        Ok(json!({
            "rule": self.rule.to_string(),
            "m": self.m,
            "k": self.k,
            "parity": self.parity.to_string(),
            "constituents": list,
        }))
    }
}

/// `ℓ_min` of an edge-order tie event (see [`TieEvent::min_ties`]).
pub fn ell_min(event: &TieEvent, hull: &[Vec<Q>], n: u64) -> Result<MinTies, TieError> {
    event.min_ties(hull, n)
}

/// `w_min` of an elimination-rule tie event (see [`TieEvent::min_ties`]).
pub fn w_min(event: &TieEvent, hull: &[Vec<Q>], n: u64) -> Result<MinTies, TieError> {
    event.min_ties(hull, n)
}
