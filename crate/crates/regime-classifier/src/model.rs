//! Finite families of strictly positive distributions over rankings.

use crate::ClassifyError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rational_polyhedra::{lp_feasible, LinearProgram, Relation, Q};
use serde_json::Value;

/// A finite family `Π` of rational distributions over `q` categories, each
/// bounded below by `ε > 0`. Its convex hull is the set of mixtures the
/// adversary may use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSpec {
    distributions: Vec<Vec<Q>>,
    epsilon: Q,
}

impl ModelSpec {
    /// Validates: at least one distribution, equal lengths, sums equal to
    /// one, every entry `≥ ε`, and `ε > 0`.
    pub fn new(distributions: Vec<Vec<Q>>, epsilon: Q) -> Result<Self, ClassifyError> {
        let bad = |m: String| Err(ClassifyError::InvalidModel(m));
        let Some(first) = distributions.first() else {
            return bad("no distributions".into());
        };
        if !epsilon.is_positive() {
            return bad(format!("floor {epsilon} must be positive"));
        }
        let q = first.len();
        if q == 0 {
            return bad("empty distribution".into());
        }
        for (i, d) in distributions.iter().enumerate() {
            if d.len() != q {
                return bad(format!("distribution {i} has {} entries, expected {q}", d.len()));
            }
            let sum: Q = d.iter().sum();
            if !sum.is_one() {
                return bad(format!("distribution {i} sums to {sum}"));
            }
            if let Some(x) = d.iter().find(|x| **x < epsilon) {
                return bad(format!("distribution {i} has entry {x} below the floor {epsilon}"));
            }
        }
        Ok(ModelSpec { distributions, epsilon })
    }

    /// Validates a family and uses its smallest entry as the floor.
    pub fn from_distributions(distributions: Vec<Vec<Q>>) -> Result<Self, ClassifyError> {
        let eps = distributions
            .iter()
            .flatten()
            .min()
            .cloned()
            .ok_or_else(|| ClassifyError::InvalidModel("no distributions".into()))?;
        ModelSpec::new(distributions, eps)
    }

    /// Impartial culture: the single uniform distribution over `q` outcomes.
    pub fn uniform(q: usize) -> Self {
        let p = Q::new(1.into(), (q as i64).into());
        ModelSpec {
            distributions: vec![vec![p.clone(); q]],
            epsilon: p,
        }
    }

    /// Parses a JSON list of distributions. Entries may be integers,
    /// `"p/q"` strings or decimal literals; all are read exactly.
    pub fn from_json(text: &str) -> Result<Self, ClassifyError> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| ClassifyError::InvalidModel(format!("not JSON: {e}")))?;
        let rows = v
            .as_array()
            .ok_or_else(|| ClassifyError::InvalidModel("expected a list of distributions".into()))?;
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let entries = row
                .as_array()
                .ok_or_else(|| ClassifyError::InvalidModel("each distribution must be a list".into()))?;
            out.push(entries.iter().map(parse_rational).collect::<Result<Vec<Q>, _>>()?);
        }
        ModelSpec::from_distributions(out)
    }

    /// Number of categories.
    pub fn q(&self) -> usize {
        self.distributions[0].len()
    }

    /// The family.
    pub fn distributions(&self) -> &[Vec<Q>] {
        &self.distributions
    }

    /// The positivity floor.
    pub fn epsilon(&self) -> &Q {
        &self.epsilon
    }

    /// Whether the family is a single distribution.
    pub fn is_single(&self) -> bool {
        self.distributions.len() == 1
    }

    /// Whether the uniform distribution lies in the convex hull (exact LP).
    pub fn hull_contains_uniform(&self) -> bool {
        let q = self.q();
        let u = Q::new(1.into(), (q as i64).into());
        if self.distributions.iter().any(|d| d.iter().all(|x| *x == u)) {
            return true;
        }
        let p = self.distributions.len();
        let mut lp = LinearProgram::nonnegative(p);
        lp.add(vec![Q::one(); p], Relation::Eq, Q::one());
        for j in 0..q {
            lp.add(self.distributions.iter().map(|d| d[j].clone()).collect(), Relation::Eq, u.clone());
        }
        lp_feasible(&lp).is_some()
    }

    /// Convex combinations `Σ (c_i / g) π_i` with nonnegative integers
    /// `c_i` summing to `g`.
    pub fn grid(&self, g: usize) -> Vec<Vec<Q>> {
        fn compositions(parts: usize, total: usize) -> Vec<Vec<usize>> {
            if parts == 1 {
                return vec![vec![total]];
            }
            (0..=total)
                .flat_map(|c| {
                    compositions(parts - 1, total - c).into_iter().map(move |mut rest| {
                        rest.push(c);
                        rest
                    })
                })
                .collect()
        }
        let g = g.max(1);
        let denom = Q::from_integer((g as i64).into());
        compositions(self.distributions.len(), g)
            .into_iter()
            .map(|c| {
                (0..self.q())
                    .map(|j| {
                        c.iter()
                            .zip(&self.distributions)
                            .fold(Q::zero(), |acc, (&ci, d)| acc + &d[j] * Q::from_integer((ci as i64).into()))
                            / &denom
                    })
                    .collect()
            })
            .collect()
    }
}

/// Reads an exact rational from a JSON integer, `"p/q"` string or decimal.
pub fn parse_rational(v: &Value) -> Result<Q, ClassifyError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(ClassifyError::InvalidModel(format!("{v} is not a number"))),
    };
    parse_rational_str(&text)
}

/// Reads `"p/q"`, an integer or a plain decimal literal exactly.
pub fn parse_rational_str(text: &str) -> Result<Q, ClassifyError> {
    let bad = || ClassifyError::InvalidModel(format!("{text:?} is not a rational literal"));
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Q::new(num, den));
    }
    text.parse::<Q>().map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rational_polyhedra::q;

    #[test]
    fn validation() {
        assert!(ModelSpec::new(vec![vec![q(1, 2), q(1, 2)]], q(1, 2)).is_ok());
        assert!(ModelSpec::new(vec![vec![q(1, 2), q(1, 3)]], q(1, 10)).is_err());
        assert!(ModelSpec::new(vec![vec![q(1, 1), q(0, 1)]], q(1, 10)).is_err());
        assert!(ModelSpec::new(vec![vec![q(1, 2), q(1, 2)]], q(0, 1)).is_err());
    }

    #[test]
    fn json_literals() {
        let m = ModelSpec::from_json(r#"[["1/3", "2/3"], [0.5, "0.5"]]"#).unwrap();
        assert_eq!(m.distributions()[1], vec![q(1, 2), q(1, 2)]);
        assert_eq!(m.epsilon(), &q(1, 3));
        assert!(ModelSpec::from_json("[[1, 1]]").is_err());
        assert!(ModelSpec::from_json("{}").is_err());
    }

    #[test]
    fn uniform_membership_and_grid() {
        assert!(ModelSpec::uniform(6).hull_contains_uniform());
        let m = ModelSpec::from_json(r#"[["1/3", "2/3"], ["2/3", "1/3"]]"#).unwrap();
        assert!(m.hull_contains_uniform());
        let skew = ModelSpec::from_json(r#"[["1/3", "2/3"], ["1/4", "3/4"]]"#).unwrap();
        assert!(!skew.hull_contains_uniform());
        let g = m.grid(4);
        assert_eq!(g.len(), 5);
        assert!(g.contains(&vec![q(1, 2), q(1, 2)]));
    }
}
