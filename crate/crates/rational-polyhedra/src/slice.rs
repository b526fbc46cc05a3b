//! Integer slices `H_n^ℤ = {x ∈ ℤ^q_{≥0} : A x ≤ b, Σx = n}`.
//!
//! Decision procedure:
//! 1. tighten every bound to `⌊b⌋` (exact for integer rows and points);
//! 2. collect equalities — `Σx = n` and every row whose negation also
//!    appears with the opposite tightened bound;
//! 3. solve the equalities over ℤ by column Hermite reduction, which settles
//!    divisibility obstructions outright and reparametrises `x = x₀ + L z`;
//! 4. round the LP relaxation and repair it by a short tabu local search
//!    over unit transfers between coordinates — a fast path that only ever
//!    reports points it has checked exactly;
//! 5. otherwise run depth-first branch-and-bound on `z` over the exact LP
//!    relaxation.

use crate::lattice::{floor, integer_affine_solutions, IntegerAffineSet};
use crate::lp::{lp_feasible, LinearProgram, Relation};
use crate::{Polyhedron, Q};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Default limit on the number of LP relaxations solved by branch-and-bound.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// Outcome of an integer-slice query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SliceDecision {
    /// A nonnegative integer point with coordinate sum `n` in the polyhedron.
    Feasible(Vec<u64>),
    /// The slice is empty.
    Infeasible,
    /// The node cap was reached before a decision.
    Undecided,
}

impl SliceDecision {
    /// `Some(true)` / `Some(false)` when decided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            SliceDecision::Feasible(_) => Some(true),
            SliceDecision::Infeasible => Some(false),
            SliceDecision::Undecided => None,
        }
    }
}

/// [`integer_slice`] with [`DEFAULT_NODE_CAP`].
pub fn integer_slice_nonempty(h: &Polyhedron, n: u64) -> SliceDecision {
    integer_slice(h, n, DEFAULT_NODE_CAP)
}

struct Reduced {
    set: IntegerAffineSet,
    /// Inequalities `coeffs·z ≤ rhs` in lattice coordinates.
    rows: Vec<(Vec<Q>, Q)>,
}

fn to_q(v: &BigInt) -> Q {
    Q::from_integer(v.clone())
}

/// Decides whether the integer slice at total `n` is nonempty, solving at
/// most `node_cap` LP relaxations.
pub fn integer_slice(h: &Polyhedron, n: u64, node_cap: usize) -> SliceDecision {
    let q = h.q();
    let bounds: Vec<BigInt> = h.b().iter().map(floor).collect();
    if n == 0 {
        return if bounds.iter().all(|b| !b.is_negative()) {
            SliceDecision::Feasible(vec![0; q])
        } else {
            SliceDecision::Infeasible
        };
    }

    // Step 2: equalities.
    let mut index: HashMap<&[i64], usize> = HashMap::new();
    for (i, row) in h.a().iter().enumerate() {
        let e = index.entry(row.as_slice()).or_insert(i);
        if bounds[i] < bounds[*e] {
            *e = i;
        }
    }
    let mut eq_rows: Vec<Vec<i64>> = vec![vec![1; q]];
    let mut eq_rhs: Vec<BigInt> = vec![BigInt::from(n)];
    let mut is_eq = vec![false; h.num_rows()];
    for (i, row) in h.a().iter().enumerate() {
        let neg: Vec<i64> = row.iter().map(|v| -v).collect();
        if let Some(&j) = index.get(neg.as_slice()) {
            let (bi, bj) = (&bounds[index[row.as_slice()]], &bounds[j]);
            if bi + bj < BigInt::zero() {
                return SliceDecision::Infeasible;
            }
            if (bi + bj).is_zero() {
                is_eq[i] = true;
                if row < &neg {
                    eq_rows.push(row.clone());
                    eq_rhs.push(bi.clone());
                }
            }
        }
    }

    // Step 4 first: it is cheap and settles most feasible slices.
    match repair_search(h, &bounds, n) {
        Repair::Found(x) => return SliceDecision::Feasible(x),
        Repair::RelaxationEmpty => return SliceDecision::Infeasible,
        Repair::GaveUp => {}
    }

    // Step 3: lattice reparametrisation.
    let Some(set) = integer_affine_solutions(&eq_rows, &eq_rhs, q) else {
        return SliceDecision::Infeasible;
    };
    let d = set.basis.len();
    let mut rows = Vec::new();
    // Nonnegativity: -(x0 + L z)_i ≤ 0.
    for i in 0..q {
        let coeffs: Vec<Q> = set.basis.iter().map(|v| to_q(&-&v[i])).collect();
        rows.push((coeffs, to_q(&set.x0[i])));
    }
    for (i, row) in h.a().iter().enumerate() {
        if is_eq[i] {
            continue;
        }
        let coeffs: Vec<Q> = set
            .basis
            .iter()
            .map(|v| {
                to_q(&row
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (&a, vj)| acc + vj * a))
            })
            .collect();
        let ax0 = row
            .iter()
            .zip(&set.x0)
            .fold(BigInt::zero(), |acc, (&a, x)| acc + x * a);
        rows.push((coeffs, to_q(&(&bounds[i] - ax0))));
    }
    let reduced = Reduced { set, rows };
    branch_and_bound(&reduced, d, node_cap)
}

enum Repair {
    Found(Vec<u64>),
    RelaxationEmpty,
    GaveUp,
}

/// Moves without improvement before a random kick.
const REPAIR_STALL: usize = 150;
/// Total moves (greedy and random) before giving up.
const REPAIR_BUDGET: usize = 30_000;
/// Recently moved coordinates that may not be moved back.
const REPAIR_TABU: usize = 7;

/// Rounds an LP-relaxation point of the slice and repairs it by unit
/// transfers `x_u → x_v`, taking the least-violating non-tabu move and
/// kicking with a few seeded random transfers whenever progress stalls.
fn repair_search(h: &Polyhedron, bounds: &[BigInt], n: u64) -> Repair {
    let q = h.q();
    let mut lp = LinearProgram::nonnegative(q);
    lp.add(vec![Q::from_integer(1.into()); q], Relation::Eq, Q::from_integer(n.into()));
    for (row, b) in h.a().iter().zip(bounds) {
        lp.add_int(row, Relation::Le, to_q(b));
    }
    let Some(relaxed) = lp_feasible(&lp) else {
        return Repair::RelaxationEmpty;
    };
    let (Some(beta), Some(n)) = (bounds.iter().map(ToPrimitive::to_i128).collect::<Option<Vec<i128>>>(), n.to_i128())
    else {
        return Repair::GaveUp;
    };

    // Largest-remainder rounding to total n.
    let mut x: Vec<i128> = relaxed.iter().map(|v| v.floor().to_integer().to_i128().unwrap_or(0)).collect();
    let mut order: Vec<usize> = (0..q).collect();
    order.sort_by(|&i, &j| (&relaxed[j] - relaxed[j].floor()).cmp(&(&relaxed[i] - relaxed[i].floor())));
    let mut deficit = n - x.iter().sum::<i128>();
    for &i in order.iter().cycle().take(q * 2) {
        if deficit <= 0 {
            break;
        }
        x[i] += 1;
        deficit -= 1;
    }
    if deficit != 0 || x.iter().any(|&v| v < 0) {
        return Repair::GaveUp;
    }

    let rows = h.a();
    let mut sums: Vec<i128> = rows.iter().map(|r| r.iter().zip(&x).map(|(&a, &v)| a as i128 * v).sum()).collect();
    let violation = |sums: &[i128]| -> i128 { sums.iter().zip(&beta).map(|(s, b)| (s - b).max(0)).sum() };
    let mut current = violation(&sums);
    let mut best = current;
    let mut stall = 0usize;
    let mut tabu: Vec<usize> = Vec::with_capacity(REPAIR_TABU);
    let mut rng = ChaCha8Rng::seed_from_u64(0x51_1ce);
    let apply = |x: &mut [i128], sums: &mut [i128], u: usize, v: usize| {
        x[u] -= 1;
        x[v] += 1;
        for (r, s) in rows.iter().zip(sums.iter_mut()) {
            *s += r[v] as i128 - r[u] as i128;
        }
    };
    for _ in 0..REPAIR_BUDGET {
        if current == 0 {
            break;
        }
        if stall > REPAIR_STALL {
            for _ in 0..rng.random_range(2..=4) {
                let support: Vec<usize> = (0..q).filter(|&u| x[u] > 0).collect();
                let u = support[rng.random_range(0..support.len())];
                let v = (u + rng.random_range(1..q)) % q;
                apply(&mut x, &mut sums, u, v);
            }
            current = violation(&sums);
            stall = 0;
            tabu.clear();
            continue;
        }
        let mut pick: Option<(i128, usize, usize)> = None;
        for u in (0..q).filter(|&u| x[u] > 0) {
            for v in (0..q).filter(|&v| v != u && !tabu.contains(&v)) {
                let cost: i128 = rows
                    .iter()
                    .zip(&sums)
                    .zip(&beta)
                    .map(|((r, s), b)| (s + r[v] as i128 - r[u] as i128 - b).max(0))
                    .sum();
                if pick.map_or(true, |(c, _, _)| cost < c) {
                    pick = Some((cost, u, v));
                }
            }
        }
        let Some((cost, u, v)) = pick else {
            return Repair::GaveUp;
        };
        apply(&mut x, &mut sums, u, v);
        current = cost;
        if tabu.len() == REPAIR_TABU {
            tabu.remove(0);
        }
        tabu.push(u);
        if current < best {
            best = current;
            stall = 0;
        } else {
            stall += 1;
        }
    }
    if current > 0 {
        return Repair::GaveUp;
    }
    let point: Vec<u64> = x.iter().map(|&v| v as u64).collect();
    debug_assert!(h.contains(&point.iter().map(|&v| v as i64).collect::<Vec<_>>()));
    Repair::Found(point)
}

fn witness(set: &IntegerAffineSet, z: &[BigInt]) -> Vec<u64> {
    set.point(z)
        .iter()
        .map(|v| v.to_u64().expect("slice points are nonnegative"))
        .collect()
}

fn satisfies(r: &Reduced, z: &[BigInt]) -> bool {
    r.rows.iter().all(|(coeffs, rhs)| {
        coeffs
            .iter()
            .zip(z)
            .filter(|(c, _)| !c.is_zero())
            .fold(Q::zero(), |acc, (c, v)| acc + c * to_q(v))
            <= *rhs
    })
}

fn branch_and_bound(r: &Reduced, d: usize, node_cap: usize) -> SliceDecision {
    if d == 0 {
        return if satisfies(r, &[]) {
            SliceDecision::Feasible(witness(&r.set, &[]))
        } else {
            SliceDecision::Infeasible
        };
    }
    // Each node carries per-coordinate integer bounds (lo, hi).
    type Bounds = Vec<(Option<BigInt>, Option<BigInt>)>;
    let mut stack: Vec<Bounds> = vec![vec![(None, None); d]];
    let mut nodes = 0usize;
    while let Some(bounds) = stack.pop() {
        if nodes >= node_cap {
            return SliceDecision::Undecided;
        }
        nodes += 1;
        let mut lp = LinearProgram::new(d);
        for (coeffs, rhs) in &r.rows {
            lp.add(coeffs.clone(), Relation::Le, rhs.clone());
        }
        for (j, (lo, hi)) in bounds.iter().enumerate() {
            let mut unit = vec![Q::zero(); d];
            unit[j] = Q::from_integer(1.into());
            if let Some(lo) = lo {
                lp.add(unit.clone(), Relation::Ge, to_q(lo));
            }
            if let Some(hi) = hi {
                lp.add(unit, Relation::Le, to_q(hi));
            }
        }
        let Some(z) = lp_feasible(&lp) else {
            continue;
        };
        let Some(j) = z.iter().position(|v| !v.is_integer()) else {
            let zi: Vec<BigInt> = z.iter().map(|v| v.to_integer()).collect();
            return SliceDecision::Feasible(witness(&r.set, &zi));
        };
        let rounded: Vec<BigInt> = z.iter().map(|v| v.round().to_integer()).collect();
        if satisfies(r, &rounded) {
            return SliceDecision::Feasible(witness(&r.set, &rounded));
        }
        let fl = z[j].floor().to_integer();
        let mut down = bounds.clone();
        down[j].1 = Some(fl.clone());
        let mut up = bounds;
        up[j].0 = Some(&fl + 1);
        // Explore the nearer side first (pushed last).
        let frac = &z[j] - to_q(&fl);
        if frac * Q::from_integer(2.into()) < Q::from_integer(1.into()) {
            stack.push(up);
            stack.push(down);
        } else {
            stack.push(down);
            stack.push(up);
        }
    }
    SliceDecision::Infeasible
}
