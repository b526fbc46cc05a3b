//! Per-rule closed forms for "exactly `k` winners" when the uniform
//! distribution lies in the hull of the model.

use crate::{ClassifyError, Regime};
use num_integer::Integer;
use num_rational::Rational64;
use preference_core::{ranking_table, MAX_HISTOGRAM_M};
use serde_json::json;
use std::collections::HashSet;
use voting_rules::{CopelandAlpha, RuleId, ScoringVector};

/// State cap for the reachable-score dynamic program.
pub const SCORE_DP_CAP: usize = 2_000_000;

/// `l_α = min{t ≥ 1 : tα ∈ ℤ}`: the reduced denominator of `α`.
pub fn l_alpha(alpha: CopelandAlpha) -> i64 {
    *alpha.value().denom()
}

fn r(p: i64, q: i64) -> Rational64 {
    Rational64::new(p, q)
}

fn exponent_k(k: usize) -> Rational64 {
    r(-(k as i64 - 1), 2)
}

fn ceil_log2(k: usize) -> i64 {
    (usize::BITS - (k - 1).leading_zeros()) as i64
}

/// Whether some `n`-profile has exactly `k` winners under the scoring rule
/// (`None` when the dynamic program exceeds [`SCORE_DP_CAP`] states).
///
/// Plurality and veto use their counting characterisations; other vectors
/// run a dynamic program over reachable score vectors (shifted so the
/// minimum is zero, which preserves the winner set).
pub fn scoring_tie_possible(rule: &RuleId, m: usize, k: usize, n: u64) -> Result<Option<bool>, ClassifyError> {
    let (m64, k64, n64) = (m as u64, k as u64, n);
    match rule {
        // Winners share top count s ≥ 1; the others take at most s − 1 each.
        RuleId::Plurality => {
            return Ok(Some((1..=n64).any(|s| k64 * s <= n64 && n64 <= k64 * s + (m64 - k64) * (s - 1))));
        }
        // Winners share the fewest vetoes v; the others take at least v + 1.
        RuleId::Veto => {
            return Ok(Some(if k == m { n64 % m64 == 0 } else { n64 >= m64 - k64 }));
        }
        _ => {}
    }
    let s: ScoringVector = rule.scoring_vector(m)?;
    if m > MAX_HISTOGRAM_M {
        return Ok(None);
    }
    let table = ranking_table(m)?;
    let vectors: Vec<Vec<i64>> = (0..table.len())
        .map(|i| (0..m).map(|a| s.score(table.position(i, a))).collect())
        .collect();
    let mut states: HashSet<Vec<i64>> = HashSet::from([vec![0; m]]);
    for _ in 0..n {
        let mut next = HashSet::with_capacity(states.len() * 2);
        for st in &states {
            for v in &vectors {
                let mut x: Vec<i64> = st.iter().zip(v).map(|(a, b)| a + b).collect();
                let lo = *x.iter().min().expect("m ≥ 2");
                x.iter_mut().for_each(|e| *e -= lo);
                next.insert(x);
            }
        }
        if next.len() > SCORE_DP_CAP {
            return Ok(None);
        }
        states = next;
    }
    Ok(Some(states.iter().any(|x| {
        let best = *x.iter().max().expect("m ≥ 2");
        x.iter().filter(|&&e| e == best).count() == k
    })))
}

/// Closed-form regime of exactly `k` winners under `rule` with `m`
/// alternatives and `n` agents, assuming the uniform distribution is in the
/// hull of the model (which makes max and min adversaries agree).
///
/// Requires `2 ≤ k ≤ m`. With two alternatives every rule reduces to
/// majority, which ties iff `n` is even.
pub fn closed_form_regime(rule: &RuleId, m: usize, k: usize, n: u64) -> Result<Regime, ClassifyError> {
    if m < 2 || k < 2 || k > m {
        return Err(ClassifyError::InvalidQuery(format!("need 2 ≤ k ≤ m, got m={m}, k={k}")));
    }
    if n == 0 {
        return Err(ClassifyError::InvalidQuery("n must be at least 1".into()));
    }
    let even = n % 2 == 0;
    if m == 2 && !matches!(rule.kind(), voting_rules::RuleKind::Scoring) {
        let case = "two alternatives: tie iff the single margin is zero";
        return Ok(if even { Regime::polynomial(r(-1, 2)) } else { Regime::zero() }.with_witness(json!({ "case": case })));
    }
    let poly = |e: Rational64, case: &str| Regime::polynomial(e).with_witness(json!({ "case": case }));
    let zero = |case: &str| Regime::zero().with_witness(json!({ "case": case }));
    Ok(match rule {
        RuleId::Plurality | RuleId::Borda | RuleId::Veto | RuleId::Scoring(_) => match scoring_tie_possible(rule, m, k, n)? {
            Some(true) => poly(exponent_k(k), "some n-profile has k winners"),
            Some(false) => zero("no n-profile has exactly k winners"),
            None => Regime::undecided("reachable-score search exceeded its state cap"),
        },
        RuleId::Maximin | RuleId::Schulze | RuleId::Baldwin => poly(exponent_k(k), "k−1 independent ties"),
        RuleId::Copeland(alpha) => copeland(*alpha, m, k, n),
        RuleId::RankedPairs => {
            if k == 2 {
                poly(r(-1, 2), "two winners: one tied pair")
            } else {
                let lower = if m >= k + 5 * ceil_log2(k) as usize {
                    r(-ceil_log2(k), 2)
                } else {
                    exponent_k(k)
                };
                Regime::polynomial_between(lower, r(-1, 2)).with_witness(json!({
                    "case": "bounds only: lower from explicit constructions, upper from needing at least one tie"
                }))
            }
        }
        RuleId::Stv | RuleId::Coombs => {
            if m >= 4 || k == 2 || n % 2 == 0 || n % 3 == 0 {
                poly(exponent_k(k), "k−1 independent ties")
            } else {
                zero("m = k = 3 needs 2 | n or 3 | n")
            }
        }
    })
}

fn copeland(alpha: CopelandAlpha, m: usize, k: usize, n: u64) -> Regime {
    let even_n = n % 2 == 0;
    let even_k = k.is_even();
    let top = k == m || k + 1 == m;
    let l = l_alpha(alpha);
    let w = |e: Rational64, case: &str| Regime::polynomial(e).with_witness(json!({ "case": case, "l_alpha": l }));
    if !even_k || !top {
        return w(r(0, 1), "k odd or k ≤ m−2: constant");
    }
    if !even_n {
        return Regime::zero().with_witness(json!({ "case": "odd n with even k ∈ {m−1, m}", "l_alpha": l }));
    }
    let k64 = k as i64;
    let half = alpha.value() >= r(1, 2);
    if k == m || half || k64 <= l * (l + 1) {
        w(r(-k64, 4), "n^(−k/4)")
    } else {
        w(r(-l * (l + 1), 4), "n^(−l_α(l_α+1)/4)")
    }
}
