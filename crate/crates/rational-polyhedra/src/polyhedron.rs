//! Polyhedra `{x ∈ ℝ^q : A·xᵀ ≤ bᵀ}` with integer `A` and rational `b`.

use crate::{PolyError, Result, Q};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// A polyhedron given by integer constraint rows and rational bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    q: usize,
    a: Vec<Vec<i64>>,
    b: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct PolyhedronJson {
    q: usize,
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
    b: Vec<String>,
}

/// Parses `"p/q"`, `"p"` or a decimal literal such as `"-0.7"`.
pub(crate) fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || PolyError::BadRational(s.to_string());
    if let Some((p, d)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(p, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let v = Q::new(num, den);
        return Ok(if negative { -v } else { v });
    }
    Ok(Q::from_integer(t.parse().map_err(|_| bad())?))
}

impl Polyhedron {
    /// Builds `{x : A x ≤ b}`, checking shapes.
    pub fn new(q: usize, a: Vec<Vec<i64>>, b: Vec<Q>) -> Result<Self> {
        if q == 0 {
            return Err(PolyError::Empty);
        }
        if a.len() != b.len() {
            return Err(PolyError::Dimension(format!(
                "{} rows but {} bounds",
                a.len(),
                b.len()
            )));
        }
        if let Some(row) = a.iter().find(|r| r.len() != q) {
            return Err(PolyError::Dimension(format!(
                "row of length {} in a polyhedron of dimension {q}",
                row.len()
            )));
        }
        Ok(Polyhedron { q, a, b })
    }

    /// Builds a polyhedron whose bounds are all zero (a cone).
    pub fn cone(q: usize, a: Vec<Vec<i64>>) -> Result<Self> {
        let b = vec![Q::zero(); a.len()];
        Polyhedron::new(q, a, b)
    }

    /// Ambient dimension.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Constraint rows.
    pub fn a(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Bounds.
    pub fn b(&self) -> &[Q] {
        &self.b
    }

    /// Number of constraint rows.
    pub fn num_rows(&self) -> usize {
        self.a.len()
    }

    /// Constraint rows as rationals.
    pub fn a_rational(&self) -> Vec<Vec<Q>> {
        self.a
            .iter()
            .map(|r| r.iter().map(|&v| Q::from_integer(v.into())).collect())
            .collect()
    }

    /// The characteristic cone `{x : A x ≤ 0}`.
    pub fn characteristic_cone(&self) -> Polyhedron {
        Polyhedron {
            q: self.q,
            a: self.a.clone(),
            b: vec![Q::zero(); self.a.len()],
        }
    }

    /// Appends a row `row·x ≤ bound`.
    pub fn push_row(&mut self, row: Vec<i64>, bound: Q) -> Result<()> {
        if row.len() != self.q {
            return Err(PolyError::Dimension(format!(
                "row of length {} in a polyhedron of dimension {}",
                row.len(),
                self.q
            )));
        }
        self.a.push(row);
        self.b.push(bound);
        Ok(())
    }

    /// Intersection with another polyhedron of the same dimension.
    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.q != other.q {
            return Err(PolyError::Dimension(format!(
                "cannot intersect dimensions {} and {}",
                self.q, other.q
            )));
        }
        let mut p = self.clone();
        p.a.extend(other.a.iter().cloned());
        p.b.extend(other.b.iter().cloned());
        Ok(p.deduplicated())
    }

    /// Removes duplicate and trivially redundant rows (all-zero rows with a
    /// nonnegative bound, and parallel copies with a looser bound).
    pub fn deduplicated(&self) -> Polyhedron {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut best: Vec<(Vec<i64>, Q)> = Vec::new();
        for (row, bound) in self.a.iter().zip(&self.b) {
            if row.iter().all(|&v| v == 0) && bound >= &Q::zero() {
                continue;
            }
            if seen.insert(row.clone()) {
                best.push((row.clone(), bound.clone()));
            } else if let Some(e) = best.iter_mut().find(|(r, _)| r == row) {
                if bound < &e.1 {
                    e.1 = bound.clone();
                }
            }
        }
        let (a, b) = best.into_iter().unzip();
        Polyhedron { q: self.q, a, b }
    }

    /// Whether the integer point `x` satisfies every constraint.
    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.q
            && self.a.iter().zip(&self.b).all(|(row, bound)| {
                let lhs: i128 = row.iter().zip(x).map(|(&a, &v)| a as i128 * v as i128).sum();
                Q::from_integer(lhs.into()) <= *bound
            })
    }

    /// Whether the rational point `x` satisfies every constraint.
    pub fn contains_rational(&self, x: &[Q]) -> bool {
        x.len() == self.q
            && self.a.iter().zip(&self.b).all(|(row, bound)| {
                let lhs = row
                    .iter()
                    .zip(x)
                    .filter(|(&a, _)| a != 0)
                    .fold(Q::zero(), |acc, (&a, v)| acc + v * Q::from_integer(a.into()));
                lhs <= *bound
            })
    }

    /// Serializes as `{"q": .., "A": [[..]], "b": ["p/q", ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolyhedronJson {
            q: self.q,
            a: self.a.clone(),
            b: self.b.iter().map(|v| v.to_string()).collect(),
        })
        .expect("polyhedron serializes")
    }

    /// Parses the JSON form produced by [`Polyhedron::to_json`]; bounds may
    /// also be written as decimals.
    pub fn from_json(text: &str) -> Result<Polyhedron> {
        let raw: PolyhedronJson =
            serde_json::from_str(text).map_err(|e| PolyError::Json(e.to_string()))?;
        let b = raw
            .b
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Polyhedron::new(raw.q, raw.a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qi};

    #[test]
    fn json_round_trip() {
        let p = Polyhedron::new(2, vec![vec![-1, 1], vec![1, -2]], vec![q(-7, 10), qi(1)]).unwrap();
        let text = p.to_json().to_string();
        assert!(text.contains("\"-7/10\""));
        assert_eq!(Polyhedron::from_json(&text).unwrap(), p);
    }

    #[test]
    fn decimal_bounds_parse() {
        assert_eq!(parse_rational("-0.7").unwrap(), q(-7, 10));
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational("3").unwrap(), qi(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn membership() {
        let p = Polyhedron::new(2, vec![vec![-3, 4], vec![1, -2]], vec![qi(1), qi(1)]).unwrap();
        assert!(p.contains(&[1, 1]));
        assert!(!p.contains(&[0, 1]));
        assert!(p.contains_rational(&[q(1, 2), q(1, 4)]));
    }

    #[test]
    fn shape_errors() {
        assert!(Polyhedron::new(2, vec![vec![1]], vec![qi(0)]).is_err());
        assert!(Polyhedron::new(2, vec![vec![1, 1]], vec![]).is_err());
        assert!(Polyhedron::new(0, vec![], vec![]).is_err());
    }

    #[test]
    fn dedup_keeps_tightest() {
        let p = Polyhedron::new(
            2,
            vec![vec![1, 0], vec![1, 0], vec![0, 0]],
            vec![qi(3), qi(1), qi(0)],
        )
        .unwrap()
        .deduplicated();
        assert_eq!(p.num_rows(), 1);
        assert_eq!(p.b()[0], qi(1));
    }
}
