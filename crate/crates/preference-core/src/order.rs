//! Palindromic orders over directed alternative pairs and the edge order of
//! a weighted majority graph.

use crate::{Alternative, PrefError, Result, Weight, WeightedMajorityGraph};
use std::fmt;
use std::str::FromStr;

/// A directed pair `(a, b)` of distinct alternatives.
pub type Edge = (Alternative, Alternative);

/// Tiered total preorder `T_1 ⊳ … ⊳ T_t ⊳ T_0 ⊳ T_{t+1} ⊳ … ⊳ T_{2t}` over all
/// directed edges, where `T_{2t+1−i}` is the edgewise flip of `T_i` and only
/// the middle tier `T_0` may be empty.
///
/// Only the upper tiers and the middle tier are stored; the lower half is
/// implied by flip symmetry. Edges inside each tier are kept sorted so that
/// structural equality is order equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PalindromicOrder {
    m: usize,
    upper: Vec<Vec<Edge>>,
    middle: Vec<Edge>,
    level: Vec<i64>,
}

impl PalindromicOrder {
    /// Validates and normalises an order given by its upper tiers
    /// `T_1, …, T_t` and its middle tier `T_0`.
    pub fn new(m: usize, upper: Vec<Vec<Edge>>, middle: Vec<Edge>) -> Result<Self> {
        let bad = |msg: String| Err(PrefError::InvalidOrder(msg));
        if m < 2 {
            return bad(format!("m={m} has no edges"));
        }
        let t = upper.len() as i64;
        let mut level = vec![i64::MIN; m * m];
        let place = |e: Edge, l: i64, level: &mut Vec<i64>| -> Result<()> {
            let (a, b) = e;
            if a >= m || b >= m || a == b {
                return Err(PrefError::InvalidOrder(format!(
                    "({},{}) is not an edge over {m} alternatives",
                    a + 1,
                    b + 1
                )));
            }
            if level[a * m + b] != i64::MIN {
                return Err(PrefError::InvalidOrder(format!(
                    "edge ({},{}) appears twice",
                    a + 1,
                    b + 1
                )));
            }
            level[a * m + b] = l;
            Ok(())
        };
        for (i, tier) in upper.iter().enumerate() {
            if tier.is_empty() {
                return bad(format!("upper tier T{} is empty", i + 1));
            }
            let l = t - i as i64;
            for &(a, b) in tier {
                place((a, b), l, &mut level)?;
                place((b, a), -l, &mut level)?;
            }
        }
        for &(a, b) in &middle {
            place((a, b), 0, &mut level)?;
        }
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    level[a * m + b] = 0;
                    continue;
                }
                if level[a * m + b] == i64::MIN {
                    return bad(format!("edge ({},{}) is missing", a + 1, b + 1));
                }
                if level[a * m + b] == 0 && level[b * m + a] != 0 {
                    return bad(format!("middle tier is not closed under flipping ({},{})", a + 1, b + 1));
                }
            }
        }
        let mut upper = upper;
        for tier in &mut upper {
            tier.sort_unstable();
        }
        let mut middle = middle;
        middle.sort_unstable();
        Ok(PalindromicOrder {
            m,
            upper,
            middle,
            level,
        })
    }

    /// Order given by the full tier list (upper tiers, optional middle tier,
    /// lower tiers). The middle tier is present exactly when the number of
    /// tiers is odd; lower tiers must be the flips of the upper ones.
    pub fn from_tiers(m: usize, tiers: Vec<Vec<Edge>>) -> Result<Self> {
        let len = tiers.len();
        let t = len / 2;
        let flip = |tier: &Vec<Edge>| {
            let mut v: Vec<Edge> = tier.iter().map(|&(a, b)| (b, a)).collect();
            v.sort_unstable();
            v
        };
        for i in 0..t {
            let mut lower = tiers[len - 1 - i].clone();
            lower.sort_unstable();
            if flip(&tiers[i]) != lower {
                return Err(PrefError::InvalidOrder(format!(
                    "tier {} is not the flip of tier {}",
                    len - i,
                    i + 1
                )));
            }
        }
        let middle = if len % 2 == 1 { tiers[t].clone() } else { Vec::new() };
        PalindromicOrder::new(m, tiers[..t].to_vec(), middle)
    }

    /// The order with every edge in the middle tier.
    pub fn all_tied(m: usize) -> Self {
        let middle = (0..m)
            .flat_map(|a| (0..m).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        PalindromicOrder::new(m, Vec::new(), middle).expect("all-tied order is valid")
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number `t` of upper tiers.
    pub fn t(&self) -> usize {
        self.upper.len()
    }

    /// Upper tiers `T_1, …, T_t`.
    pub fn upper_tiers(&self) -> &[Vec<Edge>] {
        &self.upper
    }

    /// Middle tier `T_0` (possibly empty).
    pub fn middle(&self) -> &[Edge] {
        &self.middle
    }

    /// Full tier list from top to bottom; an empty middle tier is omitted.
    pub fn tiers(&self) -> Vec<Vec<Edge>> {
        let mut out: Vec<Vec<Edge>> = self.upper.clone();
        if !self.middle.is_empty() {
            out.push(self.middle.clone());
        }
        for tier in self.upper.iter().rev() {
            let mut f: Vec<Edge> = tier.iter().map(|&(a, b)| (b, a)).collect();
            f.sort_unstable();
            out.push(f);
        }
        out
    }

    /// Representative weight of an edge: `t+1−i` for `T_i` (upper), `0` for
    /// the middle tier, negated for flips. Edges compare by this value.
    #[inline]
    pub fn level(&self, a: Alternative, b: Alternative) -> i64 {
        self.level[a * self.m + b]
    }

    /// `Ties(O) = Σ_{i≤t}(|T_i|−1) + |T_0|/2`.
    pub fn ties(&self) -> usize {
        self.upper.iter().map(|t| t.len() - 1).sum::<usize>() + self.middle.len() / 2
    }

    /// Whether every strict relation of `coarser` also holds in `self`.
    pub fn refines(&self, coarser: &PalindromicOrder) -> bool {
        if self.m != coarser.m {
            return false;
        }
        let edges: Vec<Edge> = self.edges().collect();
        edges.iter().all(|&(a, b)| {
            edges.iter().all(|&(c, d)| {
                coarser.level(a, b) <= coarser.level(c, d) || self.level(a, b) > self.level(c, d)
            })
        })
    }

    /// All directed edges.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let m = self.m;
        (0..m).flat_map(move |a| (0..m).filter(move |&b| b != a).map(move |b| (a, b)))
    }

    /// Weighted graph whose edge order is `self`, with weights equal to the
    /// representative levels.
    pub fn representative_graph(&self) -> WeightedMajorityGraph<i64> {
        WeightedMajorityGraph::from_upper(self.m, |a, b| self.level(a, b))
    }

    /// The order after relabelling each alternative `a` as `sigma[a]`.
    pub fn relabel(&self, sigma: &[Alternative]) -> PalindromicOrder {
        let map = |tier: &Vec<Edge>| tier.iter().map(|&(a, b)| (sigma[a], sigma[b])).collect();
        PalindromicOrder::new(
            self.m,
            self.upper.iter().map(map).collect(),
            map(&self.middle),
        )
        .expect("relabelling preserves validity")
    }

    /// Provenance label `O: T1={..}|…|T0={..}|…|T2t={..}`.
    pub fn provenance(&self) -> String {
        let t = self.t();
        let mut parts = Vec::new();
        for (i, tier) in self.upper.iter().enumerate() {
            parts.push(format!("T{}={}", i + 1, fmt_tier(tier)));
        }
        parts.push(format!("T0={}", fmt_tier(&self.middle)));
        for (i, tier) in self.upper.iter().enumerate().rev() {
            let f: Vec<Edge> = tier.iter().map(|&(a, b)| (b, a)).collect();
            parts.push(format!("T{}={}", 2 * t - i, fmt_tier(&f)));
        }
        format!("O: {}", parts.join("|"))
    }
}

fn fmt_tier(tier: &[Edge]) -> String {
    let mut sorted = tier.to_vec();
    sorted.sort_unstable();
    let inner: Vec<String> = sorted
        .iter()
        .map(|&(a, b)| format!("({},{})", a + 1, b + 1))
        .collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for PalindromicOrder {
    /// `{(1,2),(1,3)} > {(2,3),(3,2)} > {(2,1),(3,1)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tiers: Vec<String> = self.tiers().iter().map(|t| fmt_tier(t)).collect();
        f.write_str(&tiers.join(" > "))
    }
}

impl FromStr for PalindromicOrder {
    type Err = PrefError;

    /// Parses the `Display` form. `m` is the largest label mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let err = |message: String| PrefError::Parse { line: 1, message };
        let mut tiers = Vec::new();
        let mut m = 0;
        for part in s.split('>') {
            let part = part.trim();
            let inner = part
                .strip_prefix('{')
                .and_then(|p| p.strip_suffix('}'))
                .ok_or_else(|| err(format!("tier {part:?} must be wrapped in braces")))?;
            let mut tier = Vec::new();
            for pair in inner.split(')').map(str::trim).filter(|p| !p.is_empty()) {
                let pair = pair.trim_start_matches(',').trim().trim_start_matches('(');
                let (a, b) = pair
                    .split_once(',')
                    .ok_or_else(|| err(format!("bad edge {pair:?}")))?;
                let a: usize = a.trim().parse().map_err(|_| err(format!("bad label {a:?}")))?;
                let b: usize = b.trim().parse().map_err(|_| err(format!("bad label {b:?}")))?;
                if a == 0 || b == 0 {
                    return Err(err("labels are 1-based".into()));
                }
                m = m.max(a).max(b);
                tier.push((a - 1, b - 1));
            }
            tiers.push(tier);
        }
        PalindromicOrder::from_tiers(m, tiers)
    }
}

/// Edge order of a weighted majority graph: positive edges grouped by
/// descending weight, zero-weight edges forming the middle tier.
pub fn edge_order<W: Weight>(g: &WeightedMajorityGraph<W>) -> PalindromicOrder {
    let m = g.m();
    let mut positive: Vec<(W, Edge)> = Vec::new();
    let mut middle = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let w = g.weight(a, b);
            if w.is_positive() {
                positive.push((w.clone(), (a, b)));
            } else if w.is_zero() {
                middle.push((a, b));
            }
        }
    }
    positive.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let mut upper: Vec<Vec<Edge>> = Vec::new();
    let mut last: Option<W> = None;
    for (w, e) in positive {
        if last.as_ref() == Some(&w) {
            upper.last_mut().expect("tier exists").push(e);
        } else {
            upper.push(vec![e]);
            last = Some(w);
        }
    }
    PalindromicOrder::new(m, upper, middle).expect("antisymmetric graph yields a valid order")
}
