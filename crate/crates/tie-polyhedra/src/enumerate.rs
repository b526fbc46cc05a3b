//! Exhaustive generation of palindromic orders.
//!
//! An order is fixed by three independent choices: the set of unordered
//! pairs placed in the middle tier, an orientation of every other pair
//! (the orientation that lands in the upper half), and an ordered set
//! partition of those oriented edges into the upper tiers.

use crate::TieError;
use preference_core::{Edge, PalindromicOrder};

/// Largest `m` for which orders are enumerated (`m = 4` already has
/// 423 857 of them).
pub const MAX_ENUMERATION_M: usize = 4;

fn ordered_partitions(rest: &[Edge], prefix: &mut Vec<Vec<Edge>>, visit: &mut dyn FnMut(&[Vec<Edge>])) {
    if rest.is_empty() {
        visit(prefix);
        return;
    }
    let k = rest.len();
    for mask in 1u32..(1 << k) {
        let (tier, left): (Vec<Edge>, Vec<Edge>) = (0..k)
            .map(|i| (mask >> i & 1 == 1, rest[i]))
            .fold((Vec::new(), Vec::new()), |(mut t, mut l), (take, e)| {
                if take {
                    t.push(e);
                } else {
                    l.push(e);
                }
                (t, l)
            });
        prefix.push(tier);
        ordered_partitions(&left, prefix, visit);
        prefix.pop();
    }
}

/// Calls `visit` once for every palindromic order over `m` alternatives;
/// with `middle_empty_only`, only orders whose middle tier is empty.
pub fn visit_palindromic_orders(
    m: usize,
    middle_empty_only: bool,
    mut visit: impl FnMut(PalindromicOrder),
) -> Result<(), TieError> {
    if m > MAX_ENUMERATION_M {
        return Err(TieError::SizeGuard {
            what: "palindromic order enumeration",
            m,
            max: MAX_ENUMERATION_M,
        });
    }
    if m < 2 {
        return Err(TieError::InvalidK { k: 0, m });
    }
    let pairs: Vec<Edge> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let p = pairs.len();
    for middle_mask in 0u32..(1 << p) {
        if middle_empty_only && middle_mask != 0 {
            continue;
        }
        let middle: Vec<Edge> = (0..p)
            .filter(|&i| middle_mask >> i & 1 == 1)
            .flat_map(|i| [pairs[i], (pairs[i].1, pairs[i].0)])
            .collect();
        let free: Vec<Edge> = (0..p).filter(|&i| middle_mask >> i & 1 == 0).map(|i| pairs[i]).collect();
        for orient in 0u32..(1 << free.len()) {
            let oriented: Vec<Edge> = free
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if orient >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            ordered_partitions(&oriented, &mut Vec::new(), &mut |upper| {
                let o = PalindromicOrder::new(m, upper.to_vec(), middle.clone())
                    .expect("generated orders are valid");
                visit(o);
            });
        }
    }
    Ok(())
}

/// Every palindromic order over `m ≤ 4` alternatives, collected.
pub fn enumerate_palindromic_orders(m: usize, middle_empty_only: bool) -> Result<Vec<PalindromicOrder>, TieError> {
    let mut out = Vec::new();
    visit_palindromic_orders(m, middle_empty_only, |o| out.push(o))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_palindromic_orders(2, false).unwrap().len(), 3);
        assert_eq!(enumerate_palindromic_orders(3, false).unwrap().len(), 147);
        assert_eq!(enumerate_palindromic_orders(3, true).unwrap().len(), 104);
        assert!(enumerate_palindromic_orders(5, true).is_err());
    }

    #[test]
    fn four_alternatives_without_collecting() {
        let mut total = 0usize;
        let mut empty_middle = 0usize;
        visit_palindromic_orders(4, false, |o| {
            total += 1;
            empty_middle += o.middle().is_empty() as usize;
        })
        .unwrap();
        assert_eq!(total, 423_857);
        assert_eq!(empty_middle, 299_712);
    }
}
