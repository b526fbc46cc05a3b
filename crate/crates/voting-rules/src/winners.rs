use preference_core::Alternative;
use std::fmt;

/// Nonempty set of co-winning alternatives, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WinnerSet(Vec<Alternative>);

impl WinnerSet {
    /// Builds a winner set from any collection of alternatives.
    ///
    /// # Panics
    /// If the collection is empty: every irresolute rule selects someone.
    pub fn new(alternatives: impl IntoIterator<Item = Alternative>) -> Self {
        let mut v: Vec<Alternative> = alternatives.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        assert!(!v.is_empty(), "winner sets are nonempty");
        WinnerSet(v)
    }

    /// Winner set from a bitmask (bit `a` set iff `a` wins).
    pub fn from_mask(mask: u64) -> Self {
        WinnerSet::new((0..64).filter(|&a| mask >> a & 1 == 1))
    }

    /// Bitmask representation.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |acc, &a| acc | 1 << a)
    }

    /// All alternatives achieving the maximum of `key` over `0..m`.
    pub fn argmax<K: Ord>(m: usize, key: impl Fn(Alternative) -> K) -> Self {
        let keys: Vec<K> = (0..m).map(key).collect();
        let best = keys.iter().max().expect("m ≥ 1");
        WinnerSet::new((0..m).filter(|&a| &keys[a] == best))
    }

    /// Winners in increasing order.
    pub fn alternatives(&self) -> &[Alternative] {
        &self.0
    }

    /// Number of co-winners.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether `a` wins.
    pub fn contains(&self, a: Alternative) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    /// The winner set after relabelling `a ↦ sigma[a]`.
    pub fn relabel(&self, sigma: &[Alternative]) -> Self {
        WinnerSet::new(self.0.iter().map(|&a| sigma[a]))
    }
}

impl fmt::Display for WinnerSet {
    /// `{1,3}` with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.0.iter().map(|a| (a + 1).to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_round_trip_and_display() {
        let w = WinnerSet::new([2, 0, 2]);
        assert_eq!(w.alternatives(), &[0, 2]);
        assert_eq!(w.mask(), 0b101);
        assert_eq!(WinnerSet::from_mask(0b101), w);
        assert_eq!(w.to_string(), "{1,3}");
        assert!(w.contains(2) && !w.contains(1));
    }

    #[test]
    fn argmax_keeps_all_maxima() {
        let w = WinnerSet::argmax(4, |a| [3, 5, 5, 1][a]);
        assert_eq!(w.alternatives(), &[1, 2]);
    }
}
