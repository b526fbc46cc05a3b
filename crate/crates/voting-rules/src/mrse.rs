//! Multi-round score-based elimination (STV, Coombs, Baldwin and any other
//! per-round scoring schedule) under parallel-universes tie-breaking.
//!
//! Removed-alternative sets `B ⊊ A` are bitmasks. The PUT structure stores
//! the round preorder `W(B)` for every proper subset; the PUT graph has an
//! edge `B → B ∪ {a}` for every `a` in the bottom tier of `W(B)`.

use crate::{RuleError, ScoringVector, TotalPreorder, WinnerSet};
use preference_core::{ranking_table, Alternative, Ranking, Tally, Weight};
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

/// Per-round scoring vectors: entry `i − 2` scores rounds with `i`
/// remaining alternatives, for `i = 2..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MRSERule {
    rounds: Vec<ScoringVector>,
}

impl MRSERule {
    /// Validates that the vectors have lengths `2, 3, …, m` in order.
    pub fn new(rounds: Vec<ScoringVector>) -> Result<Self, RuleError> {
        if rounds.is_empty() {
            return Err(RuleError::InvalidScoringVector("no rounds".into()));
        }
        for (i, v) in rounds.iter().enumerate() {
            if v.len() != i + 2 {
                return Err(RuleError::LengthMismatch {
                    expected: i + 2,
                    found: v.len(),
                });
            }
        }
        Ok(MRSERule { rounds })
    }

    fn preset(m: usize, f: fn(usize) -> ScoringVector) -> Self {
        MRSERule {
            rounds: (2..=m).map(f).collect(),
        }
    }

    /// Plurality in every round.
    pub fn stv(m: usize) -> Self {
        Self::preset(m, ScoringVector::plurality)
    }

    /// Veto in every round.
    pub fn coombs(m: usize) -> Self {
        Self::preset(m, ScoringVector::veto)
    }

    /// Borda in every round.
    pub fn baldwin(m: usize) -> Self {
        Self::preset(m, ScoringVector::borda)
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.rounds.len() + 1
    }

    /// Scoring vector used when `remaining` alternatives are left.
    pub fn round_vector(&self, remaining: usize) -> &ScoringVector {
        &self.rounds[remaining - 2]
    }

    /// Score that `ranking`, restricted to the alternatives outside
    /// `removed`, gives to `a`; zero for removed `a` and for the final
    /// state with a single alternative left.
    pub fn ranking_score(&self, ranking: &Ranking, removed: u64, a: Alternative) -> i64 {
        let remaining = self.m() - removed.count_ones() as usize;
        if removed >> a & 1 == 1 || remaining < 2 {
            return 0;
        }
        let pos = ranking
            .order()
            .take_while(|&x| x != a)
            .filter(|&x| removed >> x & 1 == 0)
            .count();
        self.round_vector(remaining).score(pos)
    }
}

fn full_mask(m: usize) -> u64 {
    (1u64 << m) - 1
}

fn members(mask: u64, m: usize) -> Vec<Alternative> {
    (0..m).filter(|&a| mask >> a & 1 == 1).collect()
}

/// Round scores of every alternative on the profile restricted to the
/// complement of `removed` (zero for removed alternatives).
pub fn round_scores<W: Weight>(t: &Tally<W>, removed: u64, rule: &MRSERule) -> Result<Vec<W>, RuleError> {
    let m = t.m();
    if rule.m() != m {
        return Err(RuleError::LengthMismatch {
            expected: m,
            found: rule.m(),
        });
    }
    let remaining = m - (removed & full_mask(m)).count_ones() as usize;
    let mut scores = vec![W::zero(); m];
    if remaining < 2 {
        return Ok(scores);
    }
    let s = rule.round_vector(remaining);
    let table = ranking_table(m)?;
    for (r, w) in t.weights().iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let mut pos = 0;
        for a in table.rankings()[r].order() {
            if removed >> a & 1 == 1 {
                continue;
            }
            let sc = s.score(pos);
            if sc != 0 {
                scores[a] += w.clone() * W::from_int(sc);
            }
            pos += 1;
        }
    }
    Ok(scores)
}

fn round_preorder<W: Weight>(t: &Tally<W>, removed: u64, rule: &MRSERule) -> Result<TotalPreorder, RuleError> {
    let scores = round_scores(t, removed, rule)?;
    let ground = members(!removed & full_mask(t.m()), t.m());
    Ok(TotalPreorder::from_scores(&ground, |a| scores[a].clone()))
}

/// Map from every proper subset `B ⊊ A` (as a bitmask) to a total preorder
/// over `A ∖ B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PUTStructure {
    m: usize,
    w: Vec<TotalPreorder>,
}

/// Reachable part of a PUT graph and the winners it determines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorComponent {
    /// Reachable removed-sets, ascending by bitmask; includes the terminal
    /// sets `A ∖ {a}`.
    pub nodes: Vec<u64>,
    /// Alternatives `a` whose terminal set `A ∖ {a}` is reachable.
    pub winners: WinnerSet,
}

impl PUTStructure {
    /// Validates that entry `B` is a preorder over exactly `A ∖ B`.
    pub fn new(m: usize, w: Vec<TotalPreorder>) -> Result<Self, RuleError> {
        if !(2..=16).contains(&m) {
            return Err(RuleError::InvalidPut(format!("m={m} out of range")));
        }
        let full = full_mask(m);
        if w.len() != full as usize {
            return Err(RuleError::InvalidPut(format!(
                "expected {} entries, found {}",
                full,
                w.len()
            )));
        }
        for (b, p) in w.iter().enumerate() {
            if p.ground_mask() != !(b as u64) & full {
                return Err(RuleError::InvalidPut(format!(
                    "W({}) = {p} is not over the remaining alternatives",
                    subset_label(b as u64, m)
                )));
            }
        }
        Ok(PUTStructure { m, w })
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `W(B)` for the removed set `removed`.
    pub fn get(&self, removed: u64) -> &TotalPreorder {
        &self.w[removed as usize]
    }

    /// All entries indexed by removed-set bitmask.
    pub fn entries(&self) -> &[TotalPreorder] {
        &self.w
    }

    /// `Σ_B Ties(W(B))`.
    pub fn ties(&self) -> usize {
        self.w.iter().map(TotalPreorder::ties).sum()
    }

    /// Whether every `W(B)` refines the corresponding entry of `coarser`.
    pub fn refines(&self, coarser: &PUTStructure) -> bool {
        self.m == coarser.m && self.w.iter().zip(&coarser.w).all(|(a, b)| a.refines(b))
    }

    /// Structure with every `W(B)` a single tier.
    pub fn all_tied(m: usize) -> Self {
        let full = full_mask(m);
        let w = (0..full).map(|b| TotalPreorder::all_tied(&members(!b & full, m))).collect();
        PUTStructure { m, w }
    }

    /// Breadth-first search from `∅` along bottom-tier eliminations.
    pub fn major_component(&self) -> MajorComponent {
        major_component_with(self.m, |b| Ok::<_, RuleError>(self.get(b).clone()))
            .expect("infallible lookup")
    }

    /// Every PUT structure over `m ≤ 3` alternatives.
    pub fn enumerate(m: usize) -> Result<Vec<PUTStructure>, RuleError> {
        if m > 3 {
            return Err(RuleError::TooManyAlternatives { m, max: 3 });
        }
        let full = full_mask(m);
        let options: Vec<Vec<TotalPreorder>> = (0..full)
            .map(|b| TotalPreorder::enumerate(&members(!b & full, m)))
            .collect();
        let mut out = vec![Vec::new()];
        for opts in &options {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<TotalPreorder>| {
                    opts.iter().map(move |o| {
                        let mut p = prefix.clone();
                        p.push(o.clone());
                        p
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(|w| PUTStructure { m, w }).collect())
    }

    /// The structure after relabelling `a ↦ sigma[a]`.
    pub fn relabel(&self, sigma: &[Alternative]) -> Self {
        let mut w = self.w.clone();
        for (b, p) in self.w.iter().enumerate() {
            let image = members(b as u64, self.m).iter().fold(0u64, |acc, &a| acc | 1 << sigma[a]);
            w[image as usize] = p.relabel(sigma);
        }
        PUTStructure { m: self.m, w }
    }
}

fn major_component_with<E>(
    m: usize,
    mut lookup: impl FnMut(u64) -> Result<TotalPreorder, E>,
) -> Result<MajorComponent, E> {
    let full = full_mask(m);
    let mut seen = vec![false; 1 << m];
    let mut queue = VecDeque::from([0u64]);
    seen[0] = true;
    let mut winners = 0u64;
    while let Some(b) = queue.pop_front() {
        let left = !b & full;
        if left.count_ones() == 1 {
            winners |= left;
            continue;
        }
        for &a in lookup(b)?.bottom() {
            let next = b | 1 << a;
            if !seen[next as usize] {
                seen[next as usize] = true;
                queue.push_back(next);
            }
        }
    }
    let nodes = (0..full).filter(|&b| seen[b as usize]).collect();
    Ok(MajorComponent {
        nodes,
        winners: WinnerSet::from_mask(winners),
    })
}

fn subset_label(b: u64, m: usize) -> String {
    let l: Vec<String> = members(b, m).iter().map(|a| (a + 1).to_string()).collect();
    format!("{{{}}}", l.join(","))
}

impl fmt::Display for PUTStructure {
    /// `{}: 4 > 3 > {1,2}; {1}: …` in ascending bitmask order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .w
            .iter()
            .enumerate()
            .map(|(b, p)| format!("{}: {p}", subset_label(b as u64, self.m)))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl FromStr for PUTStructure {
    type Err = RuleError;

    /// Parses the `Display` format. Entries may come in any order; entries
    /// with a single remaining alternative may be omitted.
    fn from_str(s: &str) -> Result<Self, RuleError> {
        let bad = |msg: &str| RuleError::InvalidPut(format!("{msg} in {s:?}"));
        let mut parsed: Vec<(u64, TotalPreorder)> = Vec::new();
        for entry in s.split(';').map(str::trim).filter(|e| !e.is_empty()) {
            let (key, value) = entry.split_once(':').ok_or_else(|| bad("missing ':'"))?;
            let inner = key.trim().strip_prefix('{').and_then(|k| k.strip_suffix('}'));
            let inner = inner.ok_or_else(|| bad("subset must be braced"))?;
            let mut mask = 0u64;
            for x in inner.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                match x.parse::<usize>() {
                    Ok(l) if (1..=16).contains(&l) => mask |= 1 << (l - 1),
                    _ => return Err(bad("bad label")),
                }
            }
            parsed.push((mask, value.trim().parse()?));
        }
        let m = parsed
            .iter()
            .find(|(b, _)| *b == 0)
            .map(|(_, p)| p.ground().len())
            .ok_or_else(|| bad("missing entry for {}"))?;
        if !(2..=16).contains(&m) {
            return Err(bad("bad number of alternatives"));
        }
        let full = full_mask(m);
        let mut w: Vec<Option<TotalPreorder>> = vec![None; full as usize];
        for (b, p) in parsed {
            if b >= full {
                return Err(bad("subset is not proper"));
            }
            if w[b as usize].replace(p).is_some() {
                return Err(bad("duplicate subset"));
            }
        }
        let w = w
            .into_iter()
            .enumerate()
            .map(|(b, p)| {
                let left = !(b as u64) & full;
                match p {
                    Some(p) => Ok(p),
                    None if left.count_ones() == 1 => Ok(TotalPreorder::all_tied(&members(left, m))),
                    None => Err(bad("missing subset")),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        PUTStructure::new(m, w)
    }
}

/// The full PUT structure of a profile under `rule`.
pub fn put_structure<W: Weight>(t: &Tally<W>, rule: &MRSERule) -> Result<PUTStructure, RuleError> {
    let full = full_mask(t.m());
    let w = (0..full)
        .map(|b| round_preorder(t, b, rule))
        .collect::<Result<Vec<_>, _>>()?;
    PUTStructure::new(t.m(), w)
}

/// Major component computed lazily: round preorders are evaluated only on
/// reachable removed-sets, which gives the same result as building the
/// whole structure first.
pub fn mrse_major_component<W: Weight>(t: &Tally<W>, rule: &MRSERule) -> Result<MajorComponent, RuleError> {
    if rule.m() != t.m() {
        return Err(RuleError::LengthMismatch {
            expected: t.m(),
            found: rule.m(),
        });
    }
    major_component_with(t.m(), |b| round_preorder(t, b, rule))
}

/// Winners of a multi-round elimination rule under PUT.
pub fn mrse_winners<W: Weight>(t: &Tally<W>, rule: &MRSERule) -> Result<WinnerSet, RuleError> {
    Ok(mrse_major_component(t, rule)?.winners)
}
