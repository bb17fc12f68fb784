//! Scalar types for ratios and averages.
//!
//! Densities, boundary ratios and growth ratios are computed generically over
//! any [`Scalar`]: exact rationals for identities, floats for reporting.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A field-like numeric type that can be built from counts.
pub trait Scalar: Num + Clone + PartialOrd + FromPrimitive + std::fmt::Debug {
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// `num / den` for counts.
    fn ratio(num: usize, den: usize) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }

    fn from_big(n: &BigUint) -> Self;
}

impl Scalar for f64 {
    fn from_big(n: &BigUint) -> Self {
        n.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for f32 {
    fn from_big(n: &BigUint) -> Self {
        n.to_f32().unwrap_or(f32::INFINITY)
    }
}

impl Scalar for Ratio<BigInt> {
    fn from_big(n: &BigUint) -> Self {
        Ratio::from_integer(BigInt::from(n.clone()))
    }
}

impl Scalar for Ratio<i64> {
    fn from_big(n: &BigUint) -> Self {
        Ratio::from_integer(n.to_i64().expect("count fits in i64"))
    }
}

/// Renders an exact rational as `num/den`.
pub fn rational_string(r: &Ratio<BigInt>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Nearest `f64` to an exact rational.
pub fn rational_to_f64(r: &Ratio<BigInt>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
