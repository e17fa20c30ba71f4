use super::Real;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

/// MPFR float with a compile-time mantissa width.
#[derive(Clone)]
pub struct MpFloat<const BITS: u32>(Float);

impl<const BITS: u32> MpFloat<BITS> {
    pub fn from_float(f: Float) -> Self {
        let mut f = f;
        f.set_prec(BITS);
        MpFloat(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }
}

fn to_rug_integer(v: &BigInt) -> Integer {
    Integer::from_str_radix(&v.to_str_radix(16), 16).expect("hex digits from BigInt")
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl<const BITS: u32> $tr for MpFloat<BITS> {
            type Output = Self;
            fn $method(self, rhs: Self) -> Self {
                MpFloat(Float::with_val(BITS, &self.0 $op &rhs.0))
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl<const BITS: u32> Rem for MpFloat<BITS> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        let q = Float::with_val(BITS, &self.0 / &rhs.0).trunc();
        MpFloat(Float::with_val(BITS, &self.0 - &(q * &rhs.0)))
    }
}

impl<const BITS: u32> Neg for MpFloat<BITS> {
    type Output = Self;
    fn neg(self) -> Self {
        MpFloat(-self.0)
    }
}

impl<const BITS: u32> PartialEq for MpFloat<BITS> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<const BITS: u32> PartialOrd for MpFloat<BITS> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl<const BITS: u32> Zero for MpFloat<BITS> {
    fn zero() -> Self {
        MpFloat(Float::new(BITS))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<const BITS: u32> One for MpFloat<BITS> {
    fn one() -> Self {
        MpFloat(Float::with_val(BITS, 1))
    }
}

impl<const BITS: u32> Num for MpFloat<BITS> {
    type FromStrRadixErr = String;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, String> {
        let parsed = Float::parse_radix(s, radix as i32).map_err(|e| e.to_string())?;
        Ok(MpFloat(Float::with_val(BITS, parsed)))
    }
}

impl<const BITS: u32> fmt::Debug for MpFloat<BITS> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

impl<const BITS: u32> fmt::Display for MpFloat<BITS> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{}", self.0.to_string_radix(10, Some(p + 1))),
            None => write!(f, "{}", self.to_decimal_string()),
        }
    }
}

impl<const BITS: u32> Real for MpFloat<BITS> {
    const MANTISSA_BITS: u32 = BITS;

    fn from_f64(v: f64) -> Self {
        MpFloat(Float::with_val(BITS, v))
    }
    fn from_i64(v: i64) -> Self {
        MpFloat(Float::with_val(BITS, v))
    }
    fn from_rational(q: &BigRational) -> Self {
        let r = Rational::from((to_rug_integer(q.numer()), to_rug_integer(q.denom())));
        MpFloat(Float::with_val(BITS, &r))
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
    fn abs(&self) -> Self {
        MpFloat(self.0.clone().abs())
    }
    fn sqrt(&self) -> Self {
        MpFloat(self.0.clone().sqrt())
    }
    fn ln(&self) -> Self {
        MpFloat(self.0.clone().ln())
    }
    fn exp(&self) -> Self {
        MpFloat(self.0.clone().exp())
    }
    fn atan2(&self, x: &Self) -> Self {
        MpFloat(self.0.clone().atan2(&x.0))
    }
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }
    fn epsilon() -> Self {
        MpFloat(Float::with_val(BITS, 2f64.powi(1 - BITS as i32)))
    }
    fn to_decimal_string(&self) -> String {
        let digits = (BITS as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
        self.0.to_string_radix(10, Some(digits))
    }
    fn hypot(&self, other: &Self) -> Self {
        MpFloat(self.0.clone().hypot(&other.0))
    }
}
