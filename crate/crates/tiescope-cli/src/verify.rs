//! Self-check suites runnable from the command line.

use anyhow::{bail, Result};
use rational_polyhedra::implicit_equalities;
use regime_classifier::{cross_validate, table_grid};
use serde_json::{json, Value};
use tie_polyhedra::{
    enumerate_palindromic_orders, palindromic_polyhedron, put_polyhedron, scoring_tie_polyhedron,
};
use voting_rules::{MRSERule, PUTStructure, RuleId, ScoringVector};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    /// Short identifier.
    pub name: String,
    /// Whether it passed.
    pub passed: bool,
    /// Supporting numbers or the first failure.
    pub detail: Value,
}

/// A suite's checks and overall verdict.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    /// Suite name.
    pub suite: String,
    /// Individual checks.
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// All checks passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `{"suite", "passed", "checks": [{"name", "passed", "detail"}]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 2] = ["dimensions", "table1"];

/// Runs the named suite.
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let checks = match name {
        "dimensions" => dimension_checks()?,
        "table1" => agreement_checks()?,
        other => bail!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")),
    };
    Ok(SuiteReport { suite: name.to_string(), checks })
}

fn tally(name: &str, failures: Vec<String>, total: usize) -> Check {
    Check {
        name: name.to_string(),
        passed: failures.is_empty() && total > 0,
        detail: json!({ "checked": total, "failures": failures.len(), "first_failures": failures.iter().take(5).collect::<Vec<_>>() }),
    }
}

/// Cone dimensions at three alternatives: `m! − |T| + 1` for scoring
/// winner sets, `m! − Ties(O)` for edge orders, `m! − Ties(W)` for STV
/// structures with `Ties(W) ≤ 2`.
pub fn dimension_checks() -> Result<Vec<Check>> {
    let m = 3;
    let q = 6;
    let mut checks = Vec::new();
    for (label, s) in [("borda", ScoringVector::borda(m)), ("plurality", ScoringVector::plurality(m)), ("veto", ScoringVector::veto(m))] {
        let mut failures = Vec::new();
        let mut total = 0;
        for mask in 1u64..(1 << m) {
            let t: Vec<usize> = (0..m).filter(|&a| mask >> a & 1 == 1).collect();
            let dim = implicit_equalities(scoring_tie_polyhedron(&s, &t)?.a(), q).dim;
            total += 1;
            if dim != q - t.len() + 1 {
                failures.push(format!("{label} T={t:?}: dim {dim}"));
            }
        }
        checks.push(tally(&format!("scoring subsets ({label})"), failures, total));
    }
    let orders = enumerate_palindromic_orders(m, false)?;
    let mut failures = Vec::new();
    for o in &orders {
        let dim = implicit_equalities(palindromic_polyhedron(o)?.a(), q).dim;
        if dim + o.ties() != q {
            failures.push(format!("{o}: dim {dim}, ties {}", o.ties()));
        }
    }
    checks.push(tally("palindromic orders", failures, orders.len()));
    let rule = MRSERule::stv(m);
    let mut failures = Vec::new();
    let mut total = 0;
    for w in PUTStructure::enumerate(m)?.into_iter().filter(|w| w.ties() <= 2) {
        let dim = implicit_equalities(put_polyhedron(&w, &rule)?.a(), q).dim;
        total += 1;
        if dim + w.ties() != q {
            failures.push(format!("{w}: dim {dim}, ties {}", w.ties()));
        }
    }
    checks.push(tally("STV structures with Ties ≤ 2", failures, total));
    Ok(checks)
}

/// Generic classifier versus closed forms on the desk-scale grid, plus the
/// two-winner ranked-pairs case.
pub fn agreement_checks() -> Result<Vec<Check>> {
    let grid = table_grid()?;
    let failures: Vec<String> = grid.iter().filter(|c| !c.agree).map(|c| c.to_json().to_string()).collect();
    let mut checks = vec![tally("generic vs closed form (m=3, k∈{2,3}, n∈30..=36)", failures, grid.len())];
    let rp = cross_validate(&RuleId::RankedPairs, 3, 2, 30)?;
    checks.push(Check { name: "ranked pairs, two winners".into(), passed: rp.agree, detail: rp.to_json() });
    Ok(checks)
}
