//! Agreement harness between the generic procedure and the closed forms.

use crate::{classify_ties, closed_form_regime, Adversary, ClassifyError, ModelSpec, Regime, RegimeKind};
use preference_core::factorial;
use serde_json::{json, Value};
use voting_rules::RuleId;

/// Both classifications of one query and whether they agree.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation {
    /// Rule identifier.
    pub rule: RuleId,
    /// Alternatives.
    pub m: usize,
    /// Winners.
    pub k: usize,
    /// Agents.
    pub n: u64,
    /// Result of the polyhedral procedure.
    pub generic: Regime,
    /// Result of the closed form.
    pub closed_form: Regime,
    /// Same regime, and the generic exponent lies in the closed-form
    /// exponent (or interval).
    pub agree: bool,
}

impl CrossValidation {
    /// JSON summary.
    pub fn to_json(&self) -> Value {
        json!({
            "rule": self.rule.to_string(),
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "generic": self.generic.to_json(),
            "closed_form": self.closed_form.to_json(),
            "agree": self.agree,
        })
    }
}

/// Whether a generic result is consistent with a closed-form one.
pub fn regimes_agree(generic: &Regime, closed: &Regime) -> bool {
    if generic.kind != closed.kind || generic.kind == RegimeKind::Undecided {
        return false;
    }
    match (generic.kind, generic.exponent) {
        (RegimeKind::Polynomial, Some(e)) => closed.admits_exponent(e),
        (RegimeKind::Polynomial, None) => false,
        _ => true,
    }
}

/// Runs the generic procedure under impartial culture (max adversary) and
/// the closed form for the same query.
pub fn cross_validate(rule: &RuleId, m: usize, k: usize, n: u64) -> Result<CrossValidation, ClassifyError> {
    let model = ModelSpec::uniform(factorial(m) as usize);
    let generic = classify_ties(rule, &model, m, k, n, Adversary::Max)?;
    let closed_form = closed_form_regime(rule, m, k, n)?;
    let agree = regimes_agree(&generic, &closed_form);
    Ok(CrossValidation {
        rule: rule.clone(),
        m,
        k,
        n,
        generic,
        closed_form,
        agree,
    })
}

/// Rules covered by the desk-scale agreement grid.
pub const GRID_RULES: [&str; 9] = [
    "borda", "plurality", "veto", "maximin", "schulze", "copeland:1/2", "stv", "coombs", "baldwin",
];

/// The grid `GRID_RULES × m = 3 × k ∈ {2, 3} × n ∈ 30..=36`.
pub fn table_grid() -> Result<Vec<CrossValidation>, ClassifyError> {
    let mut out = Vec::new();
    for id in GRID_RULES {
        let rule: RuleId = id.parse()?;
        for k in 2..=3 {
            for n in 30..=36 {
                out.push(cross_validate(&rule, 3, k, n)?);
            }
        }
    }
    Ok(out)
}
