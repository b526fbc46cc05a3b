//! Characteristic cones `{x : A x ≤ 0}`: implicit equalities, dimension,
//! the row-canonical parametrisation of the equality subspace, and
//! convex-hull tests against the cone.

use crate::linalg::{rank, rref};
use crate::lp::{lp_feasible, LinearProgram, Relation};
use crate::{PolyError, Result, Q};
use num_traits::{One, Signed, Zero};

/// Implicit-equality structure of the cone `{x : A x ≤ 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeAnalysis {
    /// Indices of rows that hold with equality on the whole cone.
    pub implicit: Vec<usize>,
    /// Indices of the remaining rows.
    pub remaining: Vec<usize>,
    /// Rank of the implicit-equality rows.
    pub rank: usize,
    /// Cone dimension, `q − rank`.
    pub dim: usize,
    /// Ambient dimension.
    pub q: usize,
}

fn to_q(row: &[i64]) -> Vec<Q> {
    row.iter().map(|&v| Q::from_integer(v.into())).collect()
}

fn dot_int(row: &[i64], x: &[Q]) -> Q {
    row.iter()
        .zip(x)
        .filter(|(&a, _)| a != 0)
        .fold(Q::zero(), |acc, (&a, v)| acc + v * Q::from_integer(a.into()))
}

/// Splits the rows of `a` (each of length `q`) into implicit equalities and
/// the rest, and computes the cone dimension.
///
/// Row `i` is an implicit equality iff `{A x ≤ 0, a_i·x ≤ −1}` is
/// infeasible. Every feasible witness certifies all rows it satisfies
/// strictly, so most rows are classified without their own LP.
pub fn implicit_equalities(a: &[Vec<i64>], q: usize) -> ConeAnalysis {
    let mut status: Vec<Option<bool>> = a
        .iter()
        .map(|r| r.iter().all(|&v| v == 0).then_some(true))
        .collect();
    let mut base = LinearProgram::new(q);
    for row in a {
        base.add_int(row, Relation::Le, Q::zero());
    }
    for i in 0..a.len() {
        if status[i].is_some() {
            continue;
        }
        let mut lp = base.clone();
        lp.add_int(&a[i], Relation::Le, -Q::one());
        match lp_feasible(&lp) {
            Some(w) => {
                for (j, row) in a.iter().enumerate() {
                    if status[j].is_none() && dot_int(row, &w).is_negative() {
                        status[j] = Some(false);
                    }
                }
                debug_assert_eq!(status[i], Some(false));
            }
            None => status[i] = Some(true),
        }
    }
    let (implicit, remaining): (Vec<usize>, Vec<usize>) =
        (0..a.len()).partition(|&i| status[i] == Some(true));
    let eq_rows: Vec<Vec<Q>> = implicit.iter().map(|&i| to_q(&a[i])).collect();
    let r = rank(&eq_rows, q);
    ConeAnalysis {
        implicit,
        remaining,
        rank: r,
        dim: q - r,
        q,
    }
}

/// Parametrisation `x_{I₀} = D·(x_{I₁}, n)` of the solutions of
/// `A⁼ x = 0, Σx = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RREFDecomposition {
    /// Pivot (dependent) coordinates, 0-based and increasing.
    pub i0: Vec<usize>,
    /// Free coordinates, 0-based and increasing.
    pub i1: Vec<usize>,
    /// `|I₀| × (|I₁| + 1)` matrix; the last column multiplies `n`.
    pub d: Vec<Vec<Q>>,
}

impl RREFDecomposition {
    /// Completes a point from its free coordinates and total `n`.
    pub fn reconstruct(&self, free: &[Q], n: &Q) -> Vec<Q> {
        let q = self.i0.len() + self.i1.len();
        let mut x = vec![Q::zero(); q];
        for (&j, v) in self.i1.iter().zip(free) {
            x[j] = v.clone();
        }
        for (k, &p) in self.i0.iter().enumerate() {
            let row = &self.d[k];
            let mut v = &row[self.i1.len()] * n;
            for (c, f) in free.iter().enumerate() {
                if !row[c].is_zero() {
                    v += &row[c] * f;
                }
            }
            x[p] = v;
        }
        x
    }
}

/// Gauss–Jordan elimination of `[A⁼ | 0; 1 | n]` over `q` coordinates.
///
/// Fails with [`PolyError::OnesRowDependent`] when the all-ones row lies in
/// the row space of `a_eq`.
pub fn rref_decompose(a_eq: &[Vec<i64>], q: usize) -> Result<RREFDecomposition> {
    if let Some(row) = a_eq.iter().find(|r| r.len() != q) {
        return Err(PolyError::Dimension(format!(
            "row of length {} with q = {q}",
            row.len()
        )));
    }
    let mut rows: Vec<Vec<Q>> = a_eq
        .iter()
        .map(|r| {
            let mut v = to_q(r);
            v.push(Q::zero());
            v
        })
        .collect();
    let mut ones = vec![Q::one(); q];
    ones.push(Q::one());
    rows.push(ones);
    let form = rref(&rows, q + 1);
    if form.pivots.last() == Some(&q) {
        return Err(PolyError::OnesRowDependent);
    }
    let i0 = form.pivots.clone();
    let i1: Vec<usize> = (0..q).filter(|j| !i0.contains(j)).collect();
    let d = form
        .matrix
        .iter()
        .map(|row| {
            let mut out: Vec<Q> = i1.iter().map(|&j| -&row[j]).collect();
            out.push(row[q].clone());
            out
        })
        .collect();
    Ok(RREFDecomposition { i0, i1, d })
}

/// Whether `A xᵀ ≤ 0` holds componentwise.
pub fn point_in_cone(x: &[Q], a: &[Vec<i64>]) -> bool {
    a.iter().all(|row| !dot_int(row, x).is_positive())
}

fn check_points(points: &[Vec<Q>], a: &[Vec<i64>]) -> Result<()> {
    let Some(first) = points.first() else {
        return Err(PolyError::NoPoints);
    };
    let q = first.len();
    if points.iter().any(|p| p.len() != q) || a.iter().any(|r| r.len() != q) {
        return Err(PolyError::Dimension(
            "points and rows must share one length".into(),
        ));
    }
    Ok(())
}

/// Whether the convex hull of `points` meets the cone `{x : A x ≤ 0}`.
pub fn hull_intersects_cone(points: &[Vec<Q>], a: &[Vec<i64>]) -> Result<bool> {
    check_points(points, a)?;
    let mut lp = LinearProgram::nonnegative(points.len());
    lp.add(vec![Q::one(); points.len()], Relation::Eq, Q::one());
    for row in a {
        let coeffs: Vec<Q> = points.iter().map(|p| dot_int(row, p)).collect();
        lp.add(coeffs, Relation::Le, Q::zero());
    }
    Ok(lp_feasible(&lp).is_some())
}

/// Whether the convex hull of `points` lies inside the cone. By convexity of
/// the cone it suffices to check the listed points.
pub fn hull_subset_cone(points: &[Vec<Q>], a: &[Vec<i64>]) -> Result<bool> {
    check_points(points, a)?;
    Ok(points.iter().all(|p| point_in_cone(p, a)))
}
