//! Weighted and unweighted majority graphs.

use crate::{ranking_table, Alternative, PrefError, Result, Tally, Weight};
use std::fmt;

/// Antisymmetric weights `w(a,b) = P[a≻b] − P[b≻a]` for every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMajorityGraph<W> {
    m: usize,
    w: Vec<W>,
}

impl<W: Weight> WeightedMajorityGraph<W> {
    /// Builds a graph from `w(a,b)` for `a < b`; the lower triangle is
    /// filled by antisymmetry.
    pub fn from_upper(m: usize, mut upper: impl FnMut(Alternative, Alternative) -> W) -> Self {
        let mut w = vec![W::zero(); m * m];
        for a in 0..m {
            for b in a + 1..m {
                let v = upper(a, b);
                w[b * m + a] = -v.clone();
                w[a * m + b] = v;
            }
        }
        WeightedMajorityGraph { m, w }
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `w(a,b)`; zero on the diagonal.
    #[inline]
    pub fn weight(&self, a: Alternative, b: Alternative) -> &W {
        &self.w[a * self.m + b]
    }

    /// The graph of the relabelled profile (`a ↦ sigma[a]`).
    pub fn relabel(&self, sigma: &[Alternative]) -> Self {
        let m = self.m;
        let mut w = vec![W::zero(); m * m];
        for a in 0..m {
            for b in 0..m {
                w[sigma[a] * m + sigma[b]] = self.weight(a, b).clone();
            }
        }
        WeightedMajorityGraph { m, w }
    }

    /// Checks `w(a,b) = −w(b,a)` for every pair.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.m).all(|a| {
            (0..self.m).all(|b| self.weight(a, b).clone() + self.weight(b, a).clone() == W::zero())
        })
    }
}

impl<W: Weight> fmt::Display for WeightedMajorityGraph<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.m {
            for b in 0..self.m {
                if a != b && self.weight(a, b).is_positive() {
                    writeln!(f, "{}->{}: {}", a + 1, b + 1, self.weight(a, b))?;
                }
            }
        }
        Ok(())
    }
}

fn check_pair(m: usize, a: Alternative, b: Alternative) -> Result<()> {
    for x in [a, b] {
        if x >= m {
            return Err(PrefError::AlternativeOutOfRange { alternative: x, m });
        }
    }
    if a == b {
        return Err(PrefError::SameAlternative(a));
    }
    Ok(())
}

/// `w_P(a,b) = P[a≻b] − P[b≻a]`.
pub fn pairwise_margin<W: Weight>(t: &Tally<W>, a: Alternative, b: Alternative) -> Result<W> {
    check_pair(t.m(), a, b)?;
    let table = ranking_table(t.m())?;
    let mut margin = W::zero();
    for (r, w) in t.weights().iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        if table.position(r, a) < table.position(r, b) {
            margin += w.clone();
        } else {
            margin += -w.clone();
        }
    }
    Ok(margin)
}

/// All pairwise margins at once.
pub fn weighted_majority_graph<W: Weight>(t: &Tally<W>) -> WeightedMajorityGraph<W> {
    let m = t.m();
    let table = ranking_table(m).expect("tally has a valid m");
    let mut upper = vec![W::zero(); m * m];
    for (r, w) in t.weights().iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let pos = table.positions_of(r);
        for a in 0..m {
            for b in a + 1..m {
                if pos[a] < pos[b] {
                    upper[a * m + b] += w.clone();
                } else {
                    upper[a * m + b] += -w.clone();
                }
            }
        }
    }
    WeightedMajorityGraph::from_upper(m, |a, b| upper[a * m + b].clone())
}

/// Majority relation: `a → b` iff `w(a,b) > 0`; a pair is tied iff its
/// margin is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnweightedMajorityGraph {
    m: usize,
    sign: Vec<i8>,
}

impl UnweightedMajorityGraph {
    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether there is an edge `a → b`.
    pub fn beats(&self, a: Alternative, b: Alternative) -> bool {
        self.sign[a * self.m + b] > 0
    }

    /// Whether `a ≠ b` are tied.
    pub fn tied(&self, a: Alternative, b: Alternative) -> bool {
        a != b && self.sign[a * self.m + b] == 0
    }

    /// Number of alternatives that `a` beats.
    pub fn wins(&self, a: Alternative) -> usize {
        (0..self.m).filter(|&b| self.beats(a, b)).count()
    }

    /// Number of alternatives tied with `a`.
    pub fn ties(&self, a: Alternative) -> usize {
        (0..self.m).filter(|&b| self.tied(a, b)).count()
    }
}

/// Unweighted majority graph of a weighted one.
pub fn unweighted_majority_graph<W: Weight>(g: &WeightedMajorityGraph<W>) -> UnweightedMajorityGraph {
    let m = g.m();
    let mut sign = vec![0i8; m * m];
    for a in 0..m {
        for b in 0..m {
            let w = g.weight(a, b);
            sign[a * m + b] = if w.is_positive() {
                1
            } else if w.is_negative() {
                -1
            } else {
                0
            };
        }
    }
    UnweightedMajorityGraph { m, sign }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Histogram, Profile, Ranking};

    fn two_voters() -> Histogram {
        Profile::from_rankings(
            3,
            [
                Ranking::from_labels(&[1, 2, 3]).unwrap(),
                Ranking::from_labels(&[1, 3, 2]).unwrap(),
            ],
        )
        .unwrap()
        .histogram()
        .unwrap()
    }

    #[test]
    fn two_voter_margins() {
        let t = two_voters().tally();
        assert_eq!(pairwise_margin(&t, 0, 1).unwrap(), 2);
        assert_eq!(pairwise_margin(&t, 1, 2).unwrap(), 0);
        assert_eq!(pairwise_margin(&t, 2, 1).unwrap(), 0);
        assert_eq!(pairwise_margin(&t, 0, 0), Err(PrefError::SameAlternative(0)));
        let g = weighted_majority_graph(&t);
        assert_eq!(*g.weight(0, 2), 2);
        assert!(g.is_antisymmetric());
        let u = unweighted_majority_graph(&g);
        assert!(u.beats(0, 1) && u.beats(0, 2) && u.tied(1, 2));
    }

    #[test]
    fn symmetric_histograms_give_zero_graphs() {
        for m in 2..=5 {
            let z = weighted_majority_graph(&Histogram::zeros(m).unwrap().tally());
            let u = weighted_majority_graph(&Histogram::uniform(m).unwrap().tally());
            for a in 0..m {
                for b in 0..m {
                    assert_eq!(*z.weight(a, b), 0);
                    assert_eq!(*u.weight(a, b), 0);
                }
            }
            let ug = unweighted_majority_graph(&u);
            assert!((0..m).all(|a| ug.ties(a) == m - 1));
        }
    }

    #[test]
    fn single_vote_is_a_transitive_tournament() {
        let p = Profile::from_rankings(4, [Ranking::from_labels(&[2, 4, 1, 3]).unwrap()]).unwrap();
        let u = unweighted_majority_graph(&weighted_majority_graph(&p.histogram().unwrap().tally()));
        assert_eq!(u.wins(1), 3);
        assert_eq!(u.wins(3), 2);
        assert_eq!(u.wins(0), 1);
        assert_eq!(u.wins(2), 0);
    }
}
