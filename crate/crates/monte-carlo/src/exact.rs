//! Exact rational oracles: tie probabilities by enumerating histograms and
//! point probabilities of Poisson multinomial variables.

use crate::population::Q;
use crate::McError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use preference_core::{ranking_table, Histogram};
use std::collections::HashMap;
use voting_rules::RuleId;

/// Default cap on the number of histograms enumerated.
pub const DEFAULT_HISTOGRAM_CAP: u128 = 5_000_000;
/// Largest number of agents accepted by [`exact_histogram_pmf`].
pub const MAX_PMF_AGENTS: u64 = 60;
/// Cap on the number of partial-count states in the PMF dynamic program.
pub const PMF_STATE_CAP: usize = 2_000_000;

/// `C(n + q − 1, q − 1)`: the number of histograms of `n` agents over `q`
/// categories, saturating at `u128::MAX`.
pub fn histogram_count(n: u64, q: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 1..q as u128 {
        c = match c.checked_mul(n as u128 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    c
}

fn factorials(n: u64) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    for i in 1..=n {
        let next = f.last().expect("nonempty") * BigInt::from(i);
        f.push(next);
    }
    f
}

/// `Pr(|r(P)| = k)` for `n` i.i.d. agents drawing from `pi`, summed exactly
/// over all histograms. Errors when there are more than `cap` histograms.
pub fn exact_tie_probability(
    rule: &RuleId,
    pi: &[Q],
    m: usize,
    k: usize,
    n: u64,
    cap: u128,
) -> Result<Q, McError> {
    let q = ranking_table(m)?.len();
    if pi.len() != q {
        return Err(McError::InvalidDistribution(format!("expected {q} entries, found {}", pi.len())));
    }
    let size = histogram_count(n, q);
    if size > cap {
        return Err(McError::CapExceeded { what: "histogram enumeration", size, cap });
    }
    let fact = factorials(n);
    // term[j][c] = pi_j^c / c!
    let term: Vec<Vec<Q>> = pi
        .iter()
        .map(|p| {
            let mut pow = Q::one();
            (0..=n as usize)
                .map(|c| {
                    if c > 0 {
                        pow = &pow * p;
                    }
                    &pow / Q::from_integer(fact[c].clone())
                })
                .collect()
        })
        .collect();

    struct Walk<'a> {
        rule: &'a RuleId,
        m: usize,
        k: usize,
        term: &'a [Vec<Q>],
        counts: Vec<u64>,
        total: Q,
    }
    fn visit(w: &mut Walk<'_>, j: usize, left: u64, weight: &Q) -> Result<(), McError> {
        let q = w.counts.len();
        if j + 1 == q {
            w.counts[j] = left;
            let weight = weight * &w.term[j][left as usize];
            if weight.is_zero() {
                return Ok(());
            }
            let h = Histogram::new(w.m, w.counts.clone())?;
            if w.rule.winners(&h.tally())?.len() == w.k {
                w.total += weight;
            }
            return Ok(());
        }
        for c in 0..=left {
            w.counts[j] = c;
            let next = weight * &w.term[j][c as usize];
            if next.is_zero() {
                continue;
            }
            visit(w, j + 1, left - c, &next)?;
        }
        w.counts[j] = 0;
        Ok(())
    }
    let mut walk = Walk { rule, m, k, term: &term, counts: vec![0; q], total: Q::zero() };
    visit(&mut walk, 0, n, &Q::one())?;
    Ok(walk.total * Q::from_integer(fact[n as usize].clone()))
}

/// Multinomial point probability `n! Π π_j^{x_j} / x_j!`.
pub fn multinomial_pmf(pi: &[Q], x: &[u64]) -> Result<Q, McError> {
    if pi.len() != x.len() {
        return Err(McError::InvalidDistribution(format!("expected {} entries, found {}", x.len(), pi.len())));
    }
    let n: u64 = x.iter().sum();
    let fact = factorials(n);
    let mut p = Q::from_integer(fact[n as usize].clone());
    for (pj, &xj) in pi.iter().zip(x) {
        p = p * num_traits::pow(pj.clone(), xj as usize) / Q::from_integer(fact[xj as usize].clone());
    }
    Ok(p)
}

/// Point probability of a Poisson multinomial variable by sequential
/// convolution over agents, keeping only partial counts bounded by `x`.
pub fn pmf_dp(pis: &[Vec<Q>], x: &[u64]) -> Result<Q, McError> {
    let q = x.len();
    if let Some(bad) = pis.iter().find(|p| p.len() != q) {
        return Err(McError::InvalidDistribution(format!("expected {q} entries, found {}", bad.len())));
    }
    if x.iter().sum::<u64>() != pis.len() as u64 {
        return Ok(Q::zero());
    }
    let mut states: HashMap<Vec<u64>, Q> = HashMap::from([(vec![0; q], Q::one())]);
    for pi in pis {
        let mut next: HashMap<Vec<u64>, Q> = HashMap::with_capacity(states.len() * 2);
        for (s, p) in &states {
            for j in 0..q {
                if s[j] < x[j] && !pi[j].is_zero() {
                    let mut t = s.clone();
                    t[j] += 1;
                    *next.entry(t).or_insert_with(Q::zero) += p * &pi[j];
                }
            }
        }
        if next.len() > PMF_STATE_CAP {
            return Err(McError::CapExceeded {
                what: "point-probability dynamic program",
                size: next.len() as u128,
                cap: PMF_STATE_CAP as u128,
            });
        }
        states = next;
    }
    Ok(states.remove(x).unwrap_or_else(Q::zero))
}

/// Exact `Pr(X = x)` for the histogram `X` of independent draws from
/// `pis` (one distribution per agent, `n = pis.len() ≤ 60`).
///
/// Identical distributions use the multinomial formula; otherwise the
/// convolution dynamic program.
pub fn exact_histogram_pmf(pis: &[Vec<Q>], x: &[u64]) -> Result<Q, McError> {
    let n = pis.len() as u64;
    if n > MAX_PMF_AGENTS {
        return Err(McError::InvalidRequest(format!("{n} agents exceeds the limit {MAX_PMF_AGENTS}")));
    }
    if n == 0 {
        return Ok(if x.iter().all(|&v| v == 0) { Q::one() } else { Q::zero() });
    }
    if pis.iter().all(|p| *p == pis[0]) {
        if x.iter().sum::<u64>() != n {
            return Ok(Q::zero());
        }
        return multinomial_pmf(&pis[0], x);
    }
    pmf_dp(pis, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_counts() {
        assert_eq!(histogram_count(2, 6), 21);
        assert_eq!(histogram_count(0, 6), 1);
        assert_eq!(histogram_count(5, 1), 1);
        assert_eq!(histogram_count(3, 2), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let pi = vec![Q::new(1.into(), 6.into()); 6];
        let r = exact_tie_probability(&RuleId::Borda, &pi, 3, 2, 200, DEFAULT_HISTOGRAM_CAP);
        assert!(matches!(r, Err(McError::CapExceeded { .. })));
    }
}
