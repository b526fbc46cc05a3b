//! Exact rational feasibility LP: two-phase simplex (phase 1 only) with
//! Bland's anti-cycling rule.

use crate::Q;
use num_traits::{One, Signed, Zero};

/// Sense of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `a·x ≤ rhs`
    Le,
    /// `a·x ≥ rhs`
    Ge,
    /// `a·x = rhs`
    Eq,
}

impl Relation {
    fn flipped(self) -> Relation {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
            Relation::Eq => Relation::Eq,
        }
    }
}

/// A single rational linear constraint `coeffs·x (≤|≥|=) rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    /// Coefficients, one per variable.
    pub coeffs: Vec<Q>,
    /// Constraint sense.
    pub relation: Relation,
    /// Right-hand side.
    pub rhs: Q,
}

/// A feasibility problem over `num_vars` variables, each either free or
/// sign-constrained to be nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    nonnegative: Vec<bool>,
    constraints: Vec<LinearConstraint>,
}

impl LinearProgram {
    /// Problem with `num_vars` free variables and no constraints.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            nonnegative: vec![false; num_vars],
            constraints: Vec::new(),
        }
    }

    /// Problem with `num_vars` nonnegative variables and no constraints.
    pub fn nonnegative(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            nonnegative: vec![true; num_vars],
            constraints: Vec::new(),
        }
    }

    /// Marks variable `j` as nonnegative (or free).
    pub fn set_nonnegative(&mut self, j: usize, nonnegative: bool) {
        self.nonnegative[j] = nonnegative;
    }

    /// Adds `coeffs·x relation rhs`.
    ///
    /// # Panics
    /// If `coeffs.len()` differs from the number of variables.
    pub fn add(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) {
        assert_eq!(coeffs.len(), self.num_vars, "coefficient count");
        self.constraints.push(LinearConstraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Adds a constraint with integer coefficients.
    pub fn add_int(&mut self, coeffs: &[i64], relation: Relation, rhs: Q) {
        self.add(
            coeffs.iter().map(|&c| Q::from_integer(c.into())).collect(),
            relation,
            rhs,
        );
    }

    /// Number of variables.
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Constraints added so far.
    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    /// Whether `x` satisfies every constraint and sign restriction exactly.
    pub fn is_satisfied_by(&self, x: &[Q]) -> bool {
        if x.len() != self.num_vars {
            return false;
        }
        if x
            .iter()
            .zip(&self.nonnegative)
            .any(|(v, &nn)| nn && v.is_negative())
        {
            return false;
        }
        self.constraints.iter().all(|c| {
            let lhs = c
                .coeffs
                .iter()
                .zip(x)
                .filter(|(a, _)| !a.is_zero())
                .fold(Q::zero(), |acc, (a, v)| acc + a * v);
            match c.relation {
                Relation::Le => lhs <= c.rhs,
                Relation::Ge => lhs >= c.rhs,
                Relation::Eq => lhs == c.rhs,
            }
        })
    }
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    reduced: Vec<Q>,
    objective: Q,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, s: usize) {
        let piv = self.rows[r][s].clone();
        let nz: Vec<usize> = (0..self.rows[r].len())
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        if !piv.is_one() {
            for &j in &nz {
                self.rows[r][j] = &self.rows[r][j] / &piv;
            }
            self.rhs[r] = &self.rhs[r] / &piv;
        }
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][s].is_zero() {
                continue;
            }
            let f = self.rows[i][s].clone();
            let row = &mut self.rows[i];
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        let f = self.reduced[s].clone();
        if !f.is_zero() {
            for &j in &nz {
                self.reduced[j] -= &f * &pivot_row[j];
            }
            self.objective -= &f * &pivot_rhs;
        }
        self.basis[r] = s;
    }
}

/// Decides feasibility exactly; returns a rational witness when feasible.
pub fn lp_feasible(lp: &LinearProgram) -> Option<Vec<Q>> {
    // Structural columns: one per nonnegative variable, two (x⁺, x⁻) per
    // free variable.
    let mut pos_col = Vec::with_capacity(lp.num_vars);
    let mut neg_col = Vec::with_capacity(lp.num_vars);
    let mut ncols = 0;
    for j in 0..lp.num_vars {
        pos_col.push(ncols);
        ncols += 1;
        if lp.nonnegative[j] {
            neg_col.push(None);
        } else {
            neg_col.push(Some(ncols));
            ncols += 1;
        }
    }
    let n_struct = ncols;
    let m = lp.constraints.len();
    // Count auxiliary columns.
    let mut normalized = Vec::with_capacity(m);
    for c in &lp.constraints {
        if c.rhs.is_negative() {
            normalized.push((true, c.relation.flipped()));
        } else {
            normalized.push((false, c.relation));
        }
    }
    let n_aux: usize = normalized
        .iter()
        .map(|(_, rel)| match rel {
            Relation::Le => 1,
            Relation::Ge => 2,
            Relation::Eq => 1,
        })
        .sum();
    ncols = n_struct + n_aux;
    let mut is_artificial = vec![false; ncols];
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next = n_struct;
    for (c, &(negate, rel)) in lp.constraints.iter().zip(&normalized) {
        let mut row = vec![Q::zero(); ncols];
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let a = if negate { -a } else { a.clone() };
            if let Some(nc) = neg_col[j] {
                row[nc] = -a.clone();
            }
            row[pos_col[j]] = a;
        }
        let b = if negate { -&c.rhs } else { c.rhs.clone() };
        match rel {
            Relation::Le => {
                row[next] = Q::one();
                basis.push(next);
                next += 1;
            }
            Relation::Ge => {
                row[next] = -Q::one();
                row[next + 1] = Q::one();
                is_artificial[next + 1] = true;
                basis.push(next + 1);
                next += 2;
            }
            Relation::Eq => {
                row[next] = Q::one();
                is_artificial[next] = true;
                basis.push(next);
                next += 1;
            }
        }
        rows.push(row);
        rhs.push(b);
    }
    // Phase-1 reduced costs: c_j − Σ_{artificial basic rows} a_ij. The
    // objective cell holds minus the current sum of artificials.
    let mut reduced: Vec<Q> = (0..ncols)
        .map(|j| if is_artificial[j] { Q::one() } else { Q::zero() })
        .collect();
    let mut objective = Q::zero();
    for i in 0..m {
        if is_artificial[basis[i]] {
            for (j, a) in rows[i].iter().enumerate() {
                if !a.is_zero() {
                    reduced[j] -= a;
                }
            }
            objective -= &rhs[i];
        }
    }
    let mut t = Tableau {
        rows,
        rhs,
        reduced,
        objective,
        basis,
    };
    loop {
        if t.objective.is_zero() {
            break;
        }
        let Some(s) = (0..ncols).find(|&j| t.reduced[j].is_negative()) else {
            break;
        };
        let mut best: Option<(usize, Q)> = None;
        for i in 0..m {
            let a = &t.rows[i][s];
            if !a.is_positive() {
                continue;
            }
            let ratio = &t.rhs[i] / a;
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && t.basis[i] < t.basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        let Some((r, _)) = best else {
            // Phase 1 is bounded below by zero; an unbounded ray cannot occur.
            break;
        };
        t.pivot(r, s);
    }
    if !t.objective.is_zero() {
        return None;
    }
    let mut values = vec![Q::zero(); ncols];
    for (i, &b) in t.basis.iter().enumerate() {
        values[b] = t.rhs[i].clone();
    }
    let witness: Vec<Q> = (0..lp.num_vars)
        .map(|j| match neg_col[j] {
            Some(nc) => &values[pos_col[j]] - &values[nc],
            None => values[pos_col[j]].clone(),
        })
        .collect();
    debug_assert!(lp.is_satisfied_by(&witness));
    Some(witness)
}
