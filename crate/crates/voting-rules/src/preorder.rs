//! Total preorders over a subset of alternatives.

use crate::RuleError;
use preference_core::Alternative;
use std::fmt;
use std::str::FromStr;

/// Ordered tiers, best first, over a ground set of alternatives.
///
/// Tiers are nonempty, pairwise disjoint and each kept sorted, so
/// structural equality is preorder equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalPreorder(Vec<Vec<Alternative>>);

impl TotalPreorder {
    /// Validates tiers (nonempty, disjoint) and sorts inside each tier.
    pub fn new(tiers: Vec<Vec<Alternative>>) -> Result<Self, RuleError> {
        let mut seen = 0u64;
        let mut out = Vec::with_capacity(tiers.len());
        for mut tier in tiers {
            if tier.is_empty() {
                return Err(RuleError::InvalidPreorder("empty tier".into()));
            }
            tier.sort_unstable();
            for &a in &tier {
                if a >= 64 || seen >> a & 1 == 1 {
                    return Err(RuleError::InvalidPreorder(format!("alternative {} repeated", a + 1)));
                }
                seen |= 1 << a;
            }
            out.push(tier);
        }
        if out.is_empty() {
            return Err(RuleError::InvalidPreorder("empty ground set".into()));
        }
        Ok(TotalPreorder(out))
    }

    /// Groups `ground` by descending `score`.
    pub fn from_scores<K: Ord>(ground: &[Alternative], score: impl Fn(Alternative) -> K) -> Self {
        let mut keyed: Vec<(K, Alternative)> = ground.iter().map(|&a| (score(a), a)).collect();
        keyed.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let mut tiers: Vec<Vec<Alternative>> = Vec::new();
        let mut prev: Option<&K> = None;
        for (k, a) in &keyed {
            if prev != Some(k) {
                tiers.push(Vec::new());
                prev = Some(k);
            }
            tiers.last_mut().expect("pushed").push(*a);
        }
        TotalPreorder(tiers)
    }

    /// The preorder with a single tier.
    pub fn all_tied(ground: &[Alternative]) -> Self {
        TotalPreorder::from_scores(ground, |_| 0)
    }

    /// Tiers, best first.
    pub fn tiers(&self) -> &[Vec<Alternative>] {
        &self.0
    }

    /// Worst tier.
    pub fn bottom(&self) -> &[Alternative] {
        self.0.last().expect("nonempty")
    }

    /// Best tier.
    pub fn top(&self) -> &[Alternative] {
        &self.0[0]
    }

    /// Ground set as a bitmask.
    pub fn ground_mask(&self) -> u64 {
        self.0.iter().flatten().fold(0, |acc, &a| acc | 1 << a)
    }

    /// Ground set, sorted.
    pub fn ground(&self) -> Vec<Alternative> {
        let mut g: Vec<Alternative> = self.0.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    /// Tier index of `a` (`0` = best), if present.
    pub fn tier_of(&self, a: Alternative) -> Option<usize> {
        self.0.iter().position(|t| t.contains(&a))
    }

    /// Number of tie equations `Σ (|tier| − 1)`.
    pub fn ties(&self) -> usize {
        self.0.iter().map(|t| t.len() - 1).sum()
    }

    /// Whether every strict comparison of `coarser` holds in `self`
    /// (same ground set required).
    pub fn refines(&self, coarser: &TotalPreorder) -> bool {
        if self.ground_mask() != coarser.ground_mask() {
            return false;
        }
        let g = self.ground();
        g.iter().all(|&a| {
            g.iter().all(|&b| {
                let (ca, cb) = (coarser.tier_of(a), coarser.tier_of(b));
                ca >= cb || self.tier_of(a) < self.tier_of(b)
            })
        })
    }

    /// Every total preorder (ordered set partition) of `ground`.
    pub fn enumerate(ground: &[Alternative]) -> Vec<TotalPreorder> {
        fn rec(rest: &[Alternative], prefix: &mut Vec<Vec<Alternative>>, out: &mut Vec<TotalPreorder>) {
            if rest.is_empty() {
                out.push(TotalPreorder(prefix.clone()));
                return;
            }
            // Choose the nonempty first tier among the remaining items.
            let k = rest.len();
            for mask in 1u64..(1 << k) {
                let (tier, left): (Vec<_>, Vec<_>) =
                    (0..k).partition(|&i| mask >> i & 1 == 1);
                prefix.push(tier.iter().map(|&i| rest[i]).collect());
                let left: Vec<Alternative> = left.iter().map(|&i| rest[i]).collect();
                rec(&left, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if !ground.is_empty() {
            rec(ground, &mut Vec::new(), &mut out);
        }
        out
    }

    /// The preorder after relabelling `a ↦ sigma[a]`.
    pub fn relabel(&self, sigma: &[Alternative]) -> Self {
        TotalPreorder::new(self.0.iter().map(|t| t.iter().map(|&a| sigma[a]).collect()).collect())
            .expect("relabelling preserves validity")
    }
}

impl fmt::Display for TotalPreorder {
    /// `1 > {2,3}` with 1-based labels; singleton tiers drop braces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|t| {
                let l: Vec<String> = t.iter().map(|a| (a + 1).to_string()).collect();
                if t.len() == 1 {
                    l[0].clone()
                } else {
                    format!("{{{}}}", l.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" > "))
    }
}

impl FromStr for TotalPreorder {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, RuleError> {
        let bad = || RuleError::InvalidPreorder(s.to_string());
        let tiers = s
            .split('>')
            .map(|part| {
                let inner = part.trim().trim_start_matches('{').trim_end_matches('}');
                inner
                    .split(',')
                    .map(|x| match x.trim().parse::<usize>() {
                        Ok(l) if l >= 1 => Ok(l - 1),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        TotalPreorder::new(tiers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scores_group_into_tiers() {
        let p = TotalPreorder::from_scores(&[0, 1, 2, 3], |a| [3, 3, 4, 6][a]);
        assert_eq!(p.to_string(), "4 > 3 > {1,2}");
        assert_eq!(p.ties(), 1);
        assert_eq!(p.bottom(), &[0, 1]);
        assert_eq!(p.to_string().parse::<TotalPreorder>().unwrap(), p);
    }

    #[test]
    fn ordered_set_partitions_are_counted_by_fubini_numbers() {
        let counts: Vec<usize> = (1..=4)
            .map(|k| TotalPreorder::enumerate(&(0..k).collect::<Vec<_>>()).len())
            .collect();
        assert_eq!(counts, vec![1, 3, 13, 75]);
    }

    #[test]
    fn refinement() {
        let fine: TotalPreorder = "1 > 2 > 3".parse().unwrap();
        let coarse: TotalPreorder = "1 > {2,3}".parse().unwrap();
        let tied = TotalPreorder::all_tied(&[0, 1, 2]);
        assert!(fine.refines(&coarse) && fine.refines(&tied) && coarse.refines(&tied));
        assert!(!coarse.refines(&fine));
        assert!(fine.refines(&fine));
        let other: TotalPreorder = "2 > 1 > 3".parse().unwrap();
        assert!(!other.refines(&coarse));
    }

    #[test]
    fn rejects_malformed() {
        assert!("1 > 1".parse::<TotalPreorder>().is_err());
        assert!("1 > {}".parse::<TotalPreorder>().is_err());
        assert!("0".parse::<TotalPreorder>().is_err());
    }
}
