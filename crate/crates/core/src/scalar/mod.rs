//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! Numeric code is written once against [`Real`] and instantiated at
//! `f64` (53-bit) or [`F256`](crate::F256) (256-bit MPFR). The exact layer
//! never goes through this trait; it works on `BigRational` directly.

mod complex;
mod mp;
pub mod ser;

pub use complex::ComplexExt;
pub use mp::MpFloat;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};
use std::fmt::{Debug, Display};
use std::ops::Neg;

/// A real scalar of fixed working precision.
///
/// Only `Clone` is required so that heap-backed multiprecision floats fit.
pub trait Real: Clone + Debug + Display + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static {
    /// Number of mantissa bits (53 for `f64`).
    const MANTISSA_BITS: u32;

    fn from_f64(v: f64) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_f64(v as f64)
    }

    /// Correctly rounded (or nearly so) conversion of an exact rational.
    fn from_rational(q: &BigRational) -> Self;

    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    /// Four-quadrant arctangent of `self / x`.
    fn atan2(&self, x: &Self) -> Self;
    fn is_finite(&self) -> bool;

    /// Unit roundoff of the working precision.
    fn epsilon() -> Self;

    /// Decimal rendering with enough digits to round-trip the working precision.
    fn to_decimal_string(&self) -> String;

    fn hypot(&self, other: &Self) -> Self {
        let a = self.abs();
        let b = other.abs();
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if big.is_zero() {
            return big;
        }
        let r = small / big.clone();
        big * (Self::one() + r.clone() * r).sqrt()
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Default relative Newton tolerance for root polishing at this precision.
    fn default_root_tol() -> Self {
        match Self::MANTISSA_BITS {
            0..=24 => Self::from_f64(1e-5),
            25..=53 => Self::from_f64(1e-13),
            _ => Self::from_f64(1e-30),
        }
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // to_f64 only fails when both parts overflow f64; scale them down together.
        let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
        let n: BigInt = q.numer() >> shift;
        let d: BigInt = q.denom() >> shift;
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    })
}

impl Real for f64 {
    const MANTISSA_BITS: u32 = 53;

    fn from_f64(v: f64) -> Self {
        v
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn atan2(&self, x: &Self) -> Self {
        f64::atan2(*self, *x)
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn epsilon() -> Self {
        f64::EPSILON
    }
    fn to_decimal_string(&self) -> String {
        format!("{:.16e}", self)
    }
    fn hypot(&self, other: &Self) -> Self {
        f64::hypot(*self, *other)
    }
}

impl Real for f32 {
    const MANTISSA_BITS: u32 = 24;

    fn from_f64(v: f64) -> Self {
        v as f32
    }
    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q) as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
    fn abs(&self) -> Self {
        f32::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f32::sqrt(*self)
    }
    fn ln(&self) -> Self {
        f32::ln(*self)
    }
    fn exp(&self) -> Self {
        f32::exp(*self)
    }
    fn atan2(&self, x: &Self) -> Self {
        f32::atan2(*self, *x)
    }
    fn is_finite(&self) -> bool {
        f32::is_finite(*self)
    }
    fn epsilon() -> Self {
        f32::EPSILON
    }
    fn to_decimal_string(&self) -> String {
        format!("{:.8e}", self)
    }
    fn hypot(&self, other: &Self) -> Self {
        f32::hypot(*self, *other)
    }
}

/// Working precision selectable at run time (CLI `--precision`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Precision {
    /// IEEE double, 53-bit mantissa.
    Double,
    /// 256-bit MPFR float.
    Bits256,
}

impl Precision {
    pub fn from_bits(bits: u32) -> Option<Self> {
        match bits {
            53 => Some(Precision::Double),
            256 => Some(Precision::Bits256),
            _ => None,
        }
    }

    pub fn bits(self) -> u32 {
        match self {
            Precision::Double => 53,
            Precision::Bits256 => 256,
        }
    }
}
