//! Stable rule identifiers and uniform dispatch.

use crate::{
    copeland_winners_graph, maximin_winners_graph, mrse_winners, ranked_pairs_winners_graph,
    schulze_winners_graph, scoring_winners, CopelandAlpha, MRSERule, RuleError, ScoringVector,
    WinnerSet,
};
use preference_core::{weighted_majority_graph, PalindromicOrder, Tally, Weight, WeightedMajorityGraph};
use std::fmt;
use std::str::FromStr;

/// Family a rule belongs to; determines which tie-event machinery applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// Positional scoring rule.
    Scoring,
    /// Depends on the profile only through its edge order.
    EdgeOrder,
    /// Multi-round score-based elimination.
    Mrse,
}

/// A voting rule by its stable identifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// `plurality`
    Plurality,
    /// `borda`
    Borda,
    /// `veto`
    Veto,
    /// `scoring:<s1,...,sm>`
    Scoring(Vec<i64>),
    /// `copeland:<p>/<q>`
    Copeland(CopelandAlpha),
    /// `maximin`
    Maximin,
    /// `schulze`
    Schulze,
    /// `rankedpairs`
    RankedPairs,
    /// `stv`
    Stv,
    /// `coombs`
    Coombs,
    /// `baldwin`
    Baldwin,
}

impl RuleId {
    /// The rule's family.
    pub fn kind(&self) -> RuleKind {
        match self {
            RuleId::Plurality | RuleId::Borda | RuleId::Veto | RuleId::Scoring(_) => RuleKind::Scoring,
            RuleId::Copeland(_) | RuleId::Maximin | RuleId::Schulze | RuleId::RankedPairs => {
                RuleKind::EdgeOrder
            }
            RuleId::Stv | RuleId::Coombs | RuleId::Baldwin => RuleKind::Mrse,
        }
    }

    /// Scoring vector for `m` alternatives (scoring rules only).
    pub fn scoring_vector(&self, m: usize) -> Result<ScoringVector, RuleError> {
        match self {
            RuleId::Plurality => Ok(ScoringVector::plurality(m)),
            RuleId::Borda => Ok(ScoringVector::borda(m)),
            RuleId::Veto => Ok(ScoringVector::veto(m)),
            RuleId::Scoring(s) => {
                let v = ScoringVector::new(s.clone())?;
                if v.len() != m {
                    return Err(RuleError::LengthMismatch {
                        expected: m,
                        found: v.len(),
                    });
                }
                Ok(v)
            }
            _ => Err(self.wrong_kind("a scoring rule")),
        }
    }

    /// Per-round schedule for `m` alternatives (elimination rules only).
    pub fn mrse_rule(&self, m: usize) -> Result<MRSERule, RuleError> {
        match self {
            RuleId::Stv => Ok(MRSERule::stv(m)),
            RuleId::Coombs => Ok(MRSERule::coombs(m)),
            RuleId::Baldwin => Ok(MRSERule::baldwin(m)),
            _ => Err(self.wrong_kind("a multi-round elimination rule")),
        }
    }

    fn wrong_kind(&self, expected: &'static str) -> RuleError {
        RuleError::WrongRuleKind {
            rule: self.to_string(),
            expected,
        }
    }

    /// Winners on a tally (integer or fractional weights).
    pub fn winners<W: Weight>(&self, t: &Tally<W>) -> Result<WinnerSet, RuleError> {
        match self.kind() {
            RuleKind::Scoring => scoring_winners(t, &self.scoring_vector(t.m())?),
            RuleKind::EdgeOrder => self.winners_graph(&weighted_majority_graph(t)),
            RuleKind::Mrse => mrse_winners(t, &self.mrse_rule(t.m())?),
        }
    }

    /// Winners on a weighted majority graph (edge-order rules only).
    pub fn winners_graph<W: Weight>(&self, g: &WeightedMajorityGraph<W>) -> Result<WinnerSet, RuleError> {
        match self {
            RuleId::Copeland(alpha) => Ok(copeland_winners_graph(g, *alpha)),
            RuleId::Maximin => Ok(maximin_winners_graph(g)),
            RuleId::Schulze => Ok(schulze_winners_graph(g)),
            RuleId::RankedPairs => ranked_pairs_winners_graph(g),
            _ => Err(self.wrong_kind("an edge-order rule")),
        }
    }

    /// Winners determined by an edge order alone, evaluated on the
    /// representative graph whose weights are the tier levels.
    pub fn winners_eo(&self, o: &PalindromicOrder) -> Result<WinnerSet, RuleError> {
        self.winners_graph(&o.representative_graph())
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Plurality => write!(f, "plurality"),
            RuleId::Borda => write!(f, "borda"),
            RuleId::Veto => write!(f, "veto"),
            RuleId::Scoring(s) => {
                let e: Vec<String> = s.iter().map(i64::to_string).collect();
                write!(f, "scoring:{}", e.join(","))
            }
            RuleId::Copeland(a) => write!(f, "copeland:{a}"),
            RuleId::Maximin => write!(f, "maximin"),
            RuleId::Schulze => write!(f, "schulze"),
            RuleId::RankedPairs => write!(f, "rankedpairs"),
            RuleId::Stv => write!(f, "stv"),
            RuleId::Coombs => write!(f, "coombs"),
            RuleId::Baldwin => write!(f, "baldwin"),
        }
    }
}

impl FromStr for RuleId {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, RuleError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("scoring:") {
            let v = rest
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| RuleError::InvalidScoringVector(rest.to_string()))?;
            ScoringVector::new(v.clone())?;
            return Ok(RuleId::Scoring(v));
        }
        if let Some(rest) = s.strip_prefix("copeland:") {
            return Ok(RuleId::Copeland(rest.parse()?));
        }
        Ok(match s {
            "plurality" => RuleId::Plurality,
            "borda" => RuleId::Borda,
            "veto" => RuleId::Veto,
            "maximin" => RuleId::Maximin,
            "schulze" => RuleId::Schulze,
            "rankedpairs" | "ranked-pairs" | "ranked_pairs" | "rp" => RuleId::RankedPairs,
            "stv" => RuleId::Stv,
            "coombs" => RuleId::Coombs,
            "baldwin" => RuleId::Baldwin,
            _ => return Err(RuleError::UnknownRule(s.to_string())),
        })
    }
}

/// Winners of an edge-order rule given only the edge order.
pub fn eo_rule_winners(rule: &RuleId, o: &PalindromicOrder) -> Result<WinnerSet, RuleError> {
    rule.winners_eo(o)
}
