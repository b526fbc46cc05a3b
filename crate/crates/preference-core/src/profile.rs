//! Profiles: multisets of rankings with (possibly fractional) weights, and
//! the plain-text profile format.

use crate::{ranking_table, Alternative, Histogram, PrefError, Ranking, Result, Tally};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt::Write as _;

/// A multiset of `(ranking, weight)` pairs over alternatives `0..m`.
///
/// Ordinary profiles carry positive integer weights; fractional profiles
/// (e.g. a distribution viewed as a profile) may carry any rational weight.
/// [`Profile::histogram`] only accepts the former, while
/// [`Profile::fractional_weights`] returns the rational vector for both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    m: usize,
    entries: Vec<(Ranking, BigRational)>,
}

impl Profile {
    /// Empty profile over `m` alternatives.
    pub fn new(m: usize) -> Self {
        Profile {
            m,
            entries: Vec::new(),
        }
    }

    /// Profile with one vote per listed ranking.
    pub fn from_rankings(m: usize, rankings: impl IntoIterator<Item = Ranking>) -> Result<Self> {
        let mut p = Profile::new(m);
        for r in rankings {
            p.push(r, 1)?;
        }
        Ok(p)
    }

    /// Profile whose histogram is `h` (one entry per nonzero count).
    pub fn from_histogram(h: &Histogram) -> Self {
        let table = ranking_table(h.m()).expect("validated histogram");
        let entries = h
            .counts()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(r, &c)| {
                (
                    table.rankings()[r].clone(),
                    BigRational::from_integer(BigInt::from(c)),
                )
            })
            .collect();
        Profile { m: h.m(), entries }
    }

    /// Fractional profile with weight `weights[r]` on ranking number `r`.
    pub fn from_fractional(m: usize, weights: &[BigRational]) -> Result<Self> {
        let table = ranking_table(m)?;
        if weights.len() != table.len() {
            return Err(PrefError::LengthMismatch {
                expected: table.len(),
                found: weights.len(),
            });
        }
        let entries = weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(r, w)| (table.rankings()[r].clone(), w.clone()))
            .collect();
        Ok(Profile { m, entries })
    }

    /// Adds `count` copies of `ranking`.
    pub fn push(&mut self, ranking: Ranking, count: u64) -> Result<()> {
        self.push_weighted(ranking, BigRational::from_integer(BigInt::from(count)))
    }

    /// Adds `ranking` with an arbitrary rational weight.
    pub fn push_weighted(&mut self, ranking: Ranking, weight: BigRational) -> Result<()> {
        if ranking.m() != self.m {
            return Err(PrefError::MismatchedM(self.m, ranking.m()));
        }
        self.entries.push((ranking, weight));
        Ok(())
    }

    /// Appends every entry of `other`.
    pub fn extend(&mut self, other: &Profile) -> Result<()> {
        if other.m != self.m {
            return Err(PrefError::MismatchedM(self.m, other.m));
        }
        self.entries.extend(other.entries.iter().cloned());
        Ok(())
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Raw `(ranking, weight)` entries.
    pub fn entries(&self) -> &[(Ranking, BigRational)] {
        &self.entries
    }

    /// Total weight.
    pub fn total_weight(&self) -> BigRational {
        self.entries
            .iter()
            .fold(BigRational::zero(), |acc, (_, w)| acc + w)
    }

    /// Number of voters when the total weight is a nonnegative integer.
    pub fn n(&self) -> Option<u64> {
        let t = self.total_weight();
        if t.is_integer() && !t.is_negative() {
            t.to_integer().to_u64()
        } else {
            None
        }
    }

    /// Histogram of an ordinary profile.
    ///
    /// Errors if any weight is fractional or negative.
    pub fn histogram(&self) -> Result<Histogram> {
        let mut h = Histogram::zeros(self.m)?;
        for (r, w) in &self.entries {
            if !w.is_integer() || w.is_negative() {
                return Err(PrefError::NonIntegralWeight(w.to_string()));
            }
            let c = w
                .to_integer()
                .to_u64()
                .ok_or_else(|| PrefError::NonIntegralWeight(w.to_string()))?;
            *h.count_mut(r.index()) += c;
        }
        Ok(h)
    }

    /// Rational weight vector in canonical ranking order (any profile).
    pub fn fractional_weights(&self) -> Result<Vec<BigRational>> {
        let q = ranking_table(self.m)?.len();
        let mut v = vec![BigRational::zero(); q];
        for (r, w) in &self.entries {
            v[r.index()] += w;
        }
        Ok(v)
    }

    /// Exact rational tally (works for fractional profiles too).
    pub fn rational_tally(&self) -> Result<Tally<BigRational>> {
        Tally::new(self.m, self.fractional_weights()?)
    }

    /// Profile with every alternative `a` renamed `sigma[a]`.
    pub fn relabel(&self, sigma: &[Alternative]) -> Profile {
        Profile {
            m: self.m,
            entries: self
                .entries
                .iter()
                .map(|(r, w)| (r.relabel(sigma), w.clone()))
                .collect(),
        }
    }

    /// Parses the text format: one `1>3>2: 4` group per line, `#` comments.
    ///
    /// The multiplicity may be omitted (defaults to 1) and may be a rational
    /// `p/q` for fractional profiles. `m` is inferred from the first ranking.
    pub fn parse(text: &str) -> Result<Profile> {
        let mut profile: Option<Profile> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| PrefError::Parse {
                line: line_no,
                message,
            };
            let (ranking_part, weight_part) = match line.split_once(':') {
                Some((r, w)) => (r.trim(), w.trim()),
                None => (line, "1"),
            };
            let labels = ranking_part
                .split('>')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| err(format!("bad alternative: {e}")))?;
            let ranking = Ranking::from_labels(&labels).map_err(|e| err(e.to_string()))?;
            let weight = parse_rational(weight_part).ok_or_else(|| {
                err(format!("bad multiplicity {weight_part:?}"))
            })?;
            let p = profile.get_or_insert_with(|| Profile::new(ranking.m()));
            p.push_weighted(ranking, weight)
                .map_err(|e| err(e.to_string()))?;
        }
        profile.ok_or(PrefError::Parse {
            line: 0,
            message: "profile contains no rankings".into(),
        })
    }

    /// Writes the text format, grouping equal rankings in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Ok(weights) = self.fractional_weights() {
            let table = ranking_table(self.m).expect("validated m");
            for (r, w) in weights.iter().enumerate() {
                if !w.is_zero() {
                    let _ = writeln!(out, "{}: {}", table.rankings()[r], w);
                }
            }
        } else {
            for (r, w) in &self.entries {
                let _ = writeln!(out, "{r}: {w}");
            }
        }
        out
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

/// A profile restricted to a subset of alternatives, relabelled to
/// `0..m'` in increasing order of the original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedProfile {
    /// `alternatives[i]` is the original label of new alternative `i`.
    pub alternatives: Vec<Alternative>,
    /// The restricted profile over `0..alternatives.len()`.
    pub profile: Profile,
}

/// Removes every alternative in `removed` from each ranking, preserving the
/// relative order of the rest.
pub fn restrict_profile(p: &Profile, removed: &[Alternative]) -> Result<RestrictedProfile> {
    let m = p.m();
    let mut gone = vec![false; m];
    for &a in removed {
        if a >= m {
            return Err(PrefError::AlternativeOutOfRange { alternative: a, m });
        }
        gone[a] = true;
    }
    let alternatives: Vec<Alternative> = (0..m).filter(|&a| !gone[a]).collect();
    if alternatives.is_empty() {
        return Err(PrefError::RemoveAll);
    }
    let mut new_label = vec![usize::MAX; m];
    for (i, &a) in alternatives.iter().enumerate() {
        new_label[a] = i;
    }
    let mut out = Profile::new(alternatives.len());
    for (r, w) in p.entries() {
        let order: Vec<Alternative> = r.order().filter(|&a| !gone[a]).map(|a| new_label[a]).collect();
        out.push_weighted(Ranking::new(order)?, w.clone())?;
    }
    Ok(RestrictedProfile {
        alternatives,
        profile: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(labels: &[usize]) -> Ranking {
        Ranking::from_labels(labels).unwrap()
    }

    #[test]
    fn histogram_of_small_profiles() {
        let p = Profile::from_rankings(3, [r(&[1, 2, 3]), r(&[1, 3, 2])]).unwrap();
        let h = p.histogram().unwrap();
        assert_eq!(h.counts(), &[1, 1, 0, 0, 0, 0]);

        assert_eq!(Profile::new(3).histogram().unwrap().counts(), &[0; 6]);

        let mut p = Profile::new(3);
        p.push(r(&[2, 1, 3]), 3).unwrap();
        let h = p.histogram().unwrap();
        assert_eq!(h.counts()[r(&[2, 1, 3]).index()], 3);
        assert_eq!(h.n(), 3);
    }

    #[test]
    fn fractional_weights_are_rejected_by_histogram() {
        let mut p = Profile::new(2);
        p.push_weighted(r(&[1, 2]), BigRational::new(1.into(), 2.into()))
            .unwrap();
        assert!(matches!(p.histogram(), Err(PrefError::NonIntegralWeight(_))));
        assert_eq!(
            p.fractional_weights().unwrap()[0],
            BigRational::new(1.into(), 2.into())
        );
        let mut neg = Profile::new(2);
        neg.push_weighted(r(&[1, 2]), BigRational::from_integer((-1).into()))
            .unwrap();
        assert!(neg.histogram().is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# example\n1>3>2: 4\n2>1>3:1\n3>2>1\n";
        let p = Profile::parse(text).unwrap();
        assert_eq!(p.m(), 3);
        assert_eq!(p.n(), Some(6));
        let again = Profile::parse(&p.to_text()).unwrap();
        assert_eq!(again.histogram().unwrap(), p.histogram().unwrap());
        assert!(Profile::parse("1>1>2: 3").is_err());
        assert!(Profile::parse("# nothing").is_err());
        assert!(Profile::parse("1>2: x").is_err());
    }

    #[test]
    fn restriction_examples() {
        let p = Profile::from_rankings(3, [r(&[1, 3, 2])]).unwrap();
        let q = restrict_profile(&p, &[2]).unwrap();
        assert_eq!(q.alternatives, vec![0, 1]);
        assert_eq!(q.profile.entries()[0].0.to_string(), "1>2");

        let same = restrict_profile(&p, &[]).unwrap();
        assert_eq!(same.profile, p);

        for ranking in crate::enumerate_rankings(3).unwrap() {
            let p = Profile::from_rankings(3, [ranking]).unwrap();
            let q = restrict_profile(&p, &[0, 1]).unwrap();
            assert_eq!(q.alternatives, vec![2]);
            assert_eq!(q.profile.entries()[0].0.m(), 1);
        }
        assert_eq!(restrict_profile(&p, &[0, 1, 2]), Err(PrefError::RemoveAll));
    }
}
