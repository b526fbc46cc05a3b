//! Linear orders over alternatives and the canonical enumeration that fixes
//! the histogram index order.

use crate::{Alternative, PrefError, Result};
use std::fmt;
use std::sync::OnceLock;

/// Smallest supported number of alternatives.
pub const MIN_M: usize = 2;
/// Largest number of alternatives for histogram-indexed structures (6! = 720).
pub const MAX_HISTOGRAM_M: usize = 6;

/// `n!` as `u64` (exact for `n ≤ 20`).
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// A linear order over alternatives `0..m`, most-preferred first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ranking(Vec<u8>);

impl Ranking {
    /// Builds a ranking from an order of `0`-based alternatives.
    pub fn new(order: Vec<Alternative>) -> Result<Self> {
        let m = order.len();
        if m == 0 || m > u8::MAX as usize {
            return Err(PrefError::InvalidRanking(format!("length {m}")));
        }
        let mut seen = vec![false; m];
        for &a in &order {
            if a >= m || seen[a] {
                return Err(PrefError::InvalidRanking(format!("{order:?} is not a permutation")));
            }
            seen[a] = true;
        }
        Ok(Ranking(order.into_iter().map(|a| a as u8).collect()))
    }

    /// Builds a ranking from `1`-based labels (as written in text formats).
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(PrefError::InvalidRanking("labels are 1-based".into()));
        }
        Self::new(labels.iter().map(|&l| l - 1).collect())
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Alternatives from most to least preferred.
    pub fn order(&self) -> impl ExactSizeIterator<Item = Alternative> + '_ {
        self.0.iter().map(|&a| a as usize)
    }

    /// Alternative at rank `i` (`0` = top).
    pub fn at(&self, i: usize) -> Alternative {
        self.0[i] as usize
    }

    /// Rank (`0` = top) of alternative `a`.
    pub fn position(&self, a: Alternative) -> usize {
        self.0
            .iter()
            .position(|&x| x as usize == a)
            .expect("alternative in range")
    }

    /// Whether `a` is ranked above `b`.
    pub fn prefers(&self, a: Alternative, b: Alternative) -> bool {
        self.position(a) < self.position(b)
    }

    /// The reversed linear order.
    pub fn reversed(&self) -> Ranking {
        let mut v = self.0.clone();
        v.reverse();
        Ranking(v)
    }

    /// Applies the relabelling `a ↦ sigma[a]`.
    pub fn relabel(&self, sigma: &[Alternative]) -> Ranking {
        Ranking(self.0.iter().map(|&a| sigma[a as usize] as u8).collect())
    }

    /// Position of this ranking in the lexicographic enumeration (Lehmer code).
    pub fn index(&self) -> usize {
        let m = self.m();
        let mut used = vec![false; m];
        let mut idx = 0usize;
        for (i, &a) in self.0.iter().enumerate() {
            let smaller = (0..a as usize).filter(|&x| !used[x]).count();
            idx += smaller * factorial(m - 1 - i) as usize;
            used[a as usize] = true;
        }
        idx
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(">")?;
            }
            write!(f, "{}", a + 1)?;
        }
        Ok(())
    }
}

/// All `m!` rankings in canonical order with a precomputed position table.
#[derive(Debug)]
pub struct RankingTable {
    m: usize,
    rankings: Vec<Ranking>,
    positions: Vec<u8>,
}

impl RankingTable {
    fn build(m: usize) -> Self {
        let mut rankings = Vec::with_capacity(factorial(m) as usize);
        let mut current: Vec<Alternative> = (0..m).collect();
        loop {
            rankings.push(Ranking(current.iter().map(|&a| a as u8).collect()));
            if !next_permutation(&mut current) {
                break;
            }
        }
        let mut positions = vec![0u8; rankings.len() * m];
        for (r, ranking) in rankings.iter().enumerate() {
            for (i, &a) in ranking.0.iter().enumerate() {
                positions[r * m + a as usize] = i as u8;
            }
        }
        RankingTable {
            m,
            rankings,
            positions,
        }
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of rankings (`m!`).
    pub fn len(&self) -> usize {
        self.rankings.len()
    }

    /// Always false: a table holds at least `2!` rankings.
    pub fn is_empty(&self) -> bool {
        self.rankings.is_empty()
    }

    /// Rankings in canonical order.
    pub fn rankings(&self) -> &[Ranking] {
        &self.rankings
    }

    /// Rank (`0` = top) of alternative `a` in ranking number `r`.
    #[inline]
    pub fn position(&self, r: usize, a: Alternative) -> usize {
        self.positions[r * self.m + a] as usize
    }

    /// Rank positions of every alternative in ranking number `r`.
    #[inline]
    pub fn positions_of(&self, r: usize) -> &[u8] {
        &self.positions[r * self.m..(r + 1) * self.m]
    }
}

fn next_permutation(v: &mut [Alternative]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_m(m: usize) -> Result<()> {
    if (MIN_M..=MAX_HISTOGRAM_M).contains(&m) {
        Ok(())
    } else {
        Err(PrefError::UnsupportedM(m))
    }
}

/// Shared, lazily built ranking table for `2 ≤ m ≤ 6`.
pub fn ranking_table(m: usize) -> Result<&'static RankingTable> {
    static TABLES: [OnceLock<RankingTable>; MAX_HISTOGRAM_M + 1] =
        [const { OnceLock::new() }; MAX_HISTOGRAM_M + 1];
    check_m(m)?;
    Ok(TABLES[m].get_or_init(|| RankingTable::build(m)))
}

/// All `m!` rankings in lexicographic order (the canonical histogram order).
pub fn enumerate_rankings(m: usize) -> Result<Vec<Ranking>> {
    Ok(ranking_table(m)?.rankings().to_vec())
}
