//! Integer solutions of linear equation systems via column Hermite
//! reduction: `{x ∈ ℤ^q : E x = f}` is either empty or `x₀ + L·ℤ^d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// The affine lattice `{x₀ + Σ zᵢ·basis[i] : z ∈ ℤ^d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerAffineSet {
    /// A particular integer solution.
    pub x0: Vec<BigInt>,
    /// Lattice basis of the solution directions (linearly independent).
    pub basis: Vec<Vec<BigInt>>,
}

impl IntegerAffineSet {
    /// The point `x₀ + L z`.
    pub fn point(&self, z: &[BigInt]) -> Vec<BigInt> {
        let mut x = self.x0.clone();
        for (v, zi) in self.basis.iter().zip(z) {
            if zi.is_zero() {
                continue;
            }
            for (xj, vj) in x.iter_mut().zip(v) {
                *xj += vj * zi;
            }
        }
        x
    }
}

/// Solves `E x = f` over the integers; `None` when no integer solution exists.
///
/// Every row of `e` must have length `q`.
pub fn integer_affine_solutions(e: &[Vec<i64>], f: &[BigInt], q: usize) -> Option<IntegerAffineSet> {
    assert_eq!(e.len(), f.len(), "one right-hand side per row");
    let mut m: Vec<Vec<BigInt>> = e
        .iter()
        .map(|r| {
            assert_eq!(r.len(), q, "row length");
            r.iter().map(|&v| BigInt::from(v)).collect()
        })
        .collect();
    // U starts as the identity; columns of U track the column operations.
    let mut u: Vec<Vec<BigInt>> = (0..q)
        .map(|i| (0..q).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.len()];
    let mut c = 0;
    for i in 0..m.len() {
        if c == q {
            break;
        }
        for j in c + 1..q {
            if m[i][j].is_zero() {
                continue;
            }
            let a = m[i][c].clone();
            let b = m[i][j].clone();
            let eg = a.extended_gcd(&b);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (p, r) = (-(&b / &g), &a / &g);
            let combine = |rows: &mut Vec<Vec<BigInt>>| {
                for row in rows.iter_mut() {
                    let (xc, xj) = (row[c].clone(), row[j].clone());
                    row[c] = &s * &xc + &t * &xj;
                    row[j] = &p * &xc + &r * &xj;
                }
            };
            combine(&mut m);
            combine(&mut u);
        }
        if !m[i][c].is_zero() {
            if m[i][c].is_negative() {
                for row in m.iter_mut().chain(u.iter_mut()) {
                    row[c] = -&row[c];
                }
            }
            pivot_of_row[i] = Some(c);
            c += 1;
        }
    }
    let rank = c;
    // Forward substitution for the pivot coordinates y.
    let mut y: Vec<BigInt> = vec![BigInt::zero(); rank];
    for (i, row) in m.iter().enumerate() {
        let upto = pivot_of_row[i].unwrap_or(rank);
        let mut rest = f[i].clone();
        for k in 0..upto.min(rank) {
            rest -= &row[k] * &y[k];
        }
        match pivot_of_row[i] {
            Some(p) => {
                let (quo, rem) = rest.div_rem(&row[p]);
                if !rem.is_zero() {
                    return None;
                }
                y[p] = quo;
            }
            None => {
                if !rest.is_zero() {
                    return None;
                }
            }
        }
    }
    let x0: Vec<BigInt> = (0..q)
        .map(|i| (0..rank).fold(BigInt::zero(), |acc, k| acc + &u[i][k] * &y[k]))
        .collect();
    let basis = (rank..q)
        .map(|k| (0..q).map(|i| u[i][k].clone()).collect())
        .collect();
    Some(IntegerAffineSet { x0, basis })
}

/// Greatest integer `≤ v`.
pub(crate) fn floor(v: &crate::Q) -> BigInt {
    v.floor().to_integer()
}
