//! Numeric weight abstraction shared by integer histograms and fractional
//! (distribution-valued) profiles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exact signed weight type usable by tallies, majority graphs and rules.
///
/// Implemented for `i64` (ordinary profiles, fast path) and [`BigRational`]
/// (fractional profiles such as distributions viewed as profiles).
pub trait Weight:
    Clone
    + Ord
    + Eq
    + Debug
    + Display
    + Zero
    + Signed
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + Send
    + Sync
    + 'static
{
    /// Converts a machine integer into this weight type.
    fn from_int(v: i64) -> Self;
}

impl Weight for i64 {
    fn from_int(v: i64) -> Self {
        v
    }
}

impl Weight for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}
