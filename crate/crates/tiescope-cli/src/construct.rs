//! Profiles that realise a prescribed structure: an edge order via the
//! McGarvey construction, or an almost-linear PUT structure under STV via
//! transfer blocks.

use anyhow::{bail, ensure, Context, Result};
use preference_core::{
    edge_order, factorial, mcgarvey_profile, ranking_table, weighted_majority_graph, Alternative, Histogram,
    PalindromicOrder, Profile, Ranking,
};
use rand::seq::SliceRandom;
use rand::Rng;
use voting_rules::{put_structure, MRSERule, PUTStructure, TotalPreorder};

/// A profile whose edge order is `target`, checked by recomputing it.
pub fn construct_eo(target: &PalindromicOrder, n: u64) -> Result<Profile> {
    let p = mcgarvey_profile(target, n)?;
    let got = edge_order(&weighted_majority_graph(&p.histogram()?.tally()));
    ensure!(&got == target, "constructed profile has edge order {got}, expected {target}");
    Ok(p)
}

/// Smallest `n` for which the STV construction is guaranteed:
/// `2^m · m! · (m! + m²)`.
pub fn put_bound(m: usize) -> u64 {
    let f = factorial(m);
    (1u64 << m) * f * (f + (m * m) as u64)
}

/// Every `W(B)` with at least two remaining alternatives has at least two
/// tiers, and only its bottom tier may hold more than one alternative.
pub fn is_almost_linear(w: &PUTStructure) -> bool {
    w.entries().iter().all(|p| {
        let tiers = p.tiers();
        let size: usize = tiers.iter().map(Vec::len).sum();
        size < 2 || (tiers.len() >= 2 && tiers[..tiers.len() - 1].iter().all(|t| t.len() == 1))
    })
}

fn members(mask: u64, m: usize) -> Vec<Alternative> {
    (0..m).filter(|&a| mask >> a & 1 == 1).collect()
}

/// Plurality score of every alternative after removing `removed`, for each
/// ranking in `rankings`.
fn plurality_after(rankings: &[Ranking], removed: u64, m: usize) -> Vec<i64> {
    let mut s = vec![0i64; m];
    for r in rankings {
        if let Some(top) = r.order().find(|&x| removed >> x & 1 == 0) {
            s[top] += 1;
        }
    }
    s
}

/// Edits to the full-cycle profile `L(A)` that move one plurality point from
/// `b` to `a` after `B` is removed and change no other restricted plurality
/// score. Returned as `(ranking removed, ranking added)` pairs.
///
/// For every `B'` with `B ⊆ B' ⊆ A ∖ {a, b}` (members of `B'` and of the rest
/// `T` in index order): when `|B' ∖ B|` is even, `B' ≻ b ≻ a ≻ T` becomes
/// `B' ≻ a ≻ b ≻ T`; when odd, `B' ≻ a ≻ b ≻ T` becomes `B' ≻ b ≻ a ≻ T`.
/// Inclusion–exclusion cancels the effect on every removed-set but `B`.
pub fn transfer_block(m: usize, removed: u64, a: Alternative, b: Alternative) -> Result<Vec<(Ranking, Ranking)>> {
    ensure!(a != b && a < m && b < m, "transfer needs two distinct alternatives below m={m}");
    ensure!(removed >> a & 1 == 0 && removed >> b & 1 == 0, "transfer endpoints must remain after removal");
    let full = (1u64 << m) - 1;
    let free = full & !removed & !(1 << a) & !(1 << b);
    let mut out = Vec::new();
    // Enumerate the subsets `S` of `free`; `B' = B ∪ S`.
    let mut s = 0u64;
    loop {
        let prime = removed | s;
        let head = members(prime, m);
        let tail = members(full & !prime & !(1 << a) & !(1 << b), m);
        let build = |x: Alternative, y: Alternative| -> Result<Ranking> {
            let mut order = head.clone();
            order.extend([x, y]);
            order.extend(&tail);
            Ok(Ranking::new(order)?)
        };
        if s.count_ones() % 2 == 0 {
            out.push((build(b, a)?, build(a, b)?));
        } else {
            out.push((build(a, b)?, build(b, a)?));
        }
        if s == free {
            break;
        }
        s = (s.wrapping_sub(free)) & free;
    }
    Ok(out)
}

/// Target plurality scores for `W(B)` summing to `total`: bottom-tier
/// alternatives share a score `y`, the `i`-th of the `l` singleton tiers
/// gets `y + l − i + 1`, and any remainder goes to the top.
fn target_scores(w: &TotalPreorder, m: usize, total: i64) -> Vec<i64> {
    let tiers = w.tiers();
    let l = tiers.len() - 1;
    let size = tiers.iter().map(Vec::len).sum::<usize>() as i64;
    let ladder = (l * (l + 1) / 2) as i64;
    let y = (total - ladder).div_euclid(size);
    let extra = total - ladder - y * size;
    let mut f = vec![0i64; m];
    for (i, tier) in tiers.iter().enumerate() {
        for &c in tier {
            f[c] = y + (l - i) as i64;
        }
    }
    f[tiers[0][0]] += extra;
    f
}

/// An `n`-profile implementing the almost-linear structure `w` under STV,
/// verified by recomputing its PUT structure.
///
/// Starts from the first `n mod m!` rankings, applies one transfer block per
/// unit of score difference to reach target scores ordered as each `W(B)`
/// prescribes, and pads with copies of `L(A)`, which shift every
/// restricted plurality score equally.
pub fn construct_stv_put(w: &PUTStructure, n: u64) -> Result<Histogram> {
    let m = w.m();
    let table = ranking_table(m)?;
    ensure!(is_almost_linear(w), "target is not almost linear: {w}");
    let bound = put_bound(m);
    ensure!(n >= bound, "n = {n} is below the construction bound 2^m·m!·(m!+m²) = {bound}");
    let q = table.len() as u64;
    let filler: Vec<Ranking> = table.rankings()[..(n % q) as usize].to_vec();
    let mut counts: Vec<i64> = vec![0; q as usize];
    for r in &filler {
        counts[r.index()] += 1;
    }
    let full = (1u64 << m) - 1;
    let mut blocks = 0u64;
    for removed in 0..full {
        let target = w.get(removed);
        if target.ground().len() < 2 {
            continue;
        }
        let have = plurality_after(&filler, removed, m);
        let want = target_scores(target, m, have.iter().sum());
        let mut surplus: Vec<(Alternative, i64)> =
            (0..m).filter(|&c| have[c] > want[c]).map(|c| (c, have[c] - want[c])).collect();
        let mut deficit: Vec<(Alternative, i64)> =
            (0..m).filter(|&c| want[c] > have[c]).map(|c| (c, want[c] - have[c])).collect();
        // Pair surplus (donor b) with deficit (receiver a) unit by unit.
        while let (Some(give), Some(take)) = (surplus.last_mut(), deficit.last_mut()) {
            let units = give.1.min(take.1);
            for (out, inn) in transfer_block(m, removed, take.0, give.0)? {
                counts[out.index()] -= units;
                counts[inn.index()] += units;
            }
            counts.iter_mut().for_each(|c| *c += units);
            blocks += units as u64;
            give.1 -= units;
            take.1 -= units;
            if give.1 == 0 {
                surplus.pop();
            }
            if take.1 == 0 {
                deficit.pop();
            }
        }
    }
    let used = n % q + blocks * q;
    ensure!(used <= n, "construction needs {used} agents, more than n = {n}");
    let copies = ((n - used) / q) as i64;
    let counts: Vec<u64> = counts
        .into_iter()
        .map(|c| u64::try_from(c + copies).context("negative multiplicity after padding"))
        .collect::<Result<_>>()?;
    let h = Histogram::new(m, counts)?;
    ensure!(h.n() == n, "constructed {} agents, expected {n}", h.n());
    let got = put_structure(&h.tally(), &MRSERule::stv(m))?;
    if &got != w {
        bail!("constructed profile has PUT structure {got}, expected {w}");
    }
    Ok(h)
}

/// Structure where every `W(B)` ranks the remaining alternatives by index
/// except that the last two tie at the bottom whenever at least three remain.
pub fn default_almost_linear(m: usize) -> Result<PUTStructure> {
    let full = (1u64 << m) - 1;
    let w = (0..full)
        .map(|b| {
            let rest = members(full & !b, m);
            if rest.len() < 2 {
                return TotalPreorder::new(vec![rest]);
            }
            // With two left they must be strict; from three on, the last two tie.
            let l = (rest.len() - 2).max(1);
            let mut tiers: Vec<Vec<Alternative>> = rest[..l].iter().map(|&a| vec![a]).collect();
            tiers.push(rest[l..].to_vec());
            TotalPreorder::new(tiers)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PUTStructure::new(m, w)?)
}

/// A uniformly random almost-linear structure: for each removed-set, a
/// random order of the remaining alternatives and a random bottom-tier size.
pub fn random_almost_linear<R: Rng>(m: usize, rng: &mut R) -> Result<PUTStructure> {
    let full = (1u64 << m) - 1;
    let w = (0..full)
        .map(|b| {
            let mut rest = members(full & !b, m);
            rest.shuffle(rng);
            if rest.len() < 2 {
                return TotalPreorder::new(vec![rest]);
            }
            let bottom = rng.random_range(1..rest.len());
            let l = rest.len() - bottom;
            let mut tiers: Vec<Vec<Alternative>> = rest[..l].iter().map(|&a| vec![a]).collect();
            tiers.push(rest[l..].to_vec());
            TotalPreorder::new(tiers)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PUTStructure::new(m, w)?)
}
