//! Exact rational linear algebra and linear programming for polyhedra
//! `H = {x : A·xᵀ ≤ bᵀ}` with integer `A` and rational `b`.
//!
//! Everything here is exact: the simplex uses rational pivots with Bland's
//! rule, ranks come from rational Gaussian elimination, and integer-slice
//! feasibility is decided by a lattice reduction of the equality rows
//! followed by branch-and-bound with an explicit node cap. No result ever
//! depends on a floating-point comparison.

mod cone;
mod error;
mod lattice;
mod linalg;
mod lp;
mod polyhedron;
mod slice;

pub use cone::{
    hull_intersects_cone, hull_subset_cone, implicit_equalities, point_in_cone, rref_decompose,
    ConeAnalysis, RREFDecomposition,
};
pub use error::PolyError;
pub use lattice::{integer_affine_solutions, IntegerAffineSet};
pub use linalg::{rank, rref, Rref};
pub use lp::{lp_feasible, LinearConstraint, LinearProgram, Relation};
pub use polyhedron::Polyhedron;
pub use slice::{integer_slice, integer_slice_nonempty, SliceDecision, DEFAULT_NODE_CAP};

/// Exact rational scalar used throughout.
pub type Q = num_rational::BigRational;

/// Convenience alias for results of this crate.
pub type Result<T> = std::result::Result<T, PolyError>;

/// `p/q` as a [`Q`].
pub fn q(p: i64, d: i64) -> Q {
    Q::new(p.into(), d.into())
}

/// Integer `v` as a [`Q`].
pub fn qi(v: i64) -> Q {
    Q::from_integer(v.into())
}
