//! Exact Gaussian elimination over the rationals.

use crate::Q;
use num_traits::{One, Zero};

/// Reduced row echelon form of a rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// The reduced matrix, zero rows dropped.
    pub matrix: Vec<Vec<Q>>,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

/// Gauss–Jordan elimination with leftmost pivots.
///
/// Rows must share a common length `cols`; an empty row list yields an
/// empty form.
pub fn rref(rows: &[Vec<Q>], cols: usize) -> Rref {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        if !piv.is_one() {
            for x in a[r].iter_mut().skip(c) {
                *x = &*x / &piv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Rref { matrix: a, pivots }
}

/// Rank of a rational matrix with `cols` columns.
pub fn rank(rows: &[Vec<Q>], cols: usize) -> usize {
    rref(rows, cols).pivots.len()
}
