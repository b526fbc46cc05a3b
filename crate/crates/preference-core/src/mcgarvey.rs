//! McGarvey-style synthesis of profiles with a prescribed edge order.

use crate::{
    Alternative, PalindromicOrder, PrefError, Profile, Ranking, Result, WeightedMajorityGraph,
};

/// Target majority-graph weights realising `target` with `n` voters of the
/// given parity.
///
/// Even `n`: tier `T_i` gets weight `2(t+1−i)` and the middle tier `0`.
/// Odd `n`: tier `T_i` gets weight `2(t−i)+1`; the middle tier must be empty
/// because every margin of an odd profile is odd.
pub fn mcgarvey_weights(target: &PalindromicOrder, n_is_odd: bool) -> Result<WeightedMajorityGraph<i64>> {
    let t = target.t() as i64;
    if n_is_odd && !target.middle().is_empty() {
        return Err(PrefError::InvalidOrder(
            "odd voter counts require an empty middle tier".into(),
        ));
    }
    Ok(WeightedMajorityGraph::from_upper(target.m(), |a, b| {
        let level = target.level(a, b);
        if level == 0 {
            0
        } else {
            // level = t+1−i for T_i; flips carry the negated value.
            let i = t + 1 - level.abs();
            let w = if n_is_odd { 2 * (t - i) + 1 } else { 2 * (t + 1 - i) };
            w * level.signum()
        }
    }))
}

/// `a ≻ b ≻ rest` and `reverse(rest) ≻ a ≻ b`: together they add `2` to
/// `w(a,b)` and leave every other margin unchanged.
fn gadget(m: usize, a: Alternative, b: Alternative) -> [Ranking; 2] {
    let rest: Vec<Alternative> = (0..m).filter(|&x| x != a && x != b).collect();
    let mut first = vec![a, b];
    first.extend(&rest);
    let mut second: Vec<Alternative> = rest.iter().rev().copied().collect();
    second.extend([a, b]);
    [
        Ranking::new(first).expect("permutation"),
        Ranking::new(second).expect("permutation"),
    ]
}

/// An `n`-profile whose edge order is exactly `target`.
///
/// The base profile realises the weights of [`mcgarvey_weights`] with
/// gadget pairs (plus one seed vote when `n` is odd), and is padded with
/// reversal pairs `{R, R̄}` that leave every margin unchanged.
///
/// Requires `n ≥ m⁴` (the proven bound) and an empty middle tier for odd `n`.
pub fn mcgarvey_profile(target: &PalindromicOrder, n: u64) -> Result<Profile> {
    let m = target.m();
    let bound = (m as u64).pow(4);
    if n < bound {
        return Err(PrefError::TooFewVoters { n, bound });
    }
    let odd = n % 2 == 1;
    if odd && !target.middle().is_empty() {
        return Err(PrefError::ParityMismatch(n));
    }
    let weights = mcgarvey_weights(target, odd)?;
    let mut profile = Profile::new(m);
    let seed: Vec<Alternative> = (0..m).collect();
    let seed = Ranking::new(seed)?;
    if odd {
        profile.push(seed.clone(), 1)?;
    }
    for a in 0..m {
        for b in 0..m {
            let w = *weights.weight(a, b);
            if w <= 0 {
                continue;
            }
            let current = if odd {
                if seed.prefers(a, b) {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            let pairs = (w - current) / 2;
            if pairs > 0 {
                for r in gadget(m, a, b) {
                    profile.push(r, pairs as u64)?;
                }
            }
        }
    }
    let used = profile.n().expect("integral base profile");
    if used > n {
        return Err(PrefError::TooFewVoters { n, bound: used });
    }
    let padding = (n - used) / 2;
    if padding > 0 {
        profile.push(seed.clone(), padding)?;
        profile.push(seed.reversed(), padding)?;
    }
    debug_assert_eq!(profile.n(), Some(n));
    Ok(profile)
}
