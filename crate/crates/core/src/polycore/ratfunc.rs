use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::{ExactPoly, ExactRational};
use num_complex::Complex;
use num_traits::{One, Zero};
use std::fmt;

/// Exact rational function `numerator / denominator` in lowest terms.
///
/// The denominator is monic, so equal functions have equal representations.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: ExactPoly,
    denominator: ExactPoly,
}

impl RationalFunction {
    pub fn new(numerator: ExactPoly, denominator: ExactPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidArgument("rational function with zero denominator".into()));
        }
        Ok(Self::reduced(numerator, denominator))
    }

    fn reduced(numerator: ExactPoly, denominator: ExactPoly) -> Self {
        if numerator.is_zero() {
            return RationalFunction {
                numerator,
                denominator: Poly::one(),
            };
        }
        let g = numerator.gcd(&denominator);
        let (mut num, mut den) = if g.is_constant() {
            (numerator, denominator)
        } else {
            (
                numerator.exact_div(&g).expect("gcd divides numerator"),
                denominator.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lead = den.leading().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            let inv = ExactRational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction {
            numerator: num,
            denominator: den,
        }
    }

    pub fn from_poly(p: ExactPoly) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Poly::one(),
        }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn numerator(&self) -> &ExactPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &ExactPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_constant()
    }

    /// `deg(P) - deg(Q)`; `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        let dn = self.numerator.degree()? as i64;
        Some(dn - self.denominator.degree().unwrap_or(0) as i64)
    }

    pub fn derivative(&self) -> Self {
        let n = &self.numerator;
        let d = &self.denominator;
        let num = &(&n.derivative(1) * d) - &(n * &d.derivative(1));
        Self::reduced(num, d * d)
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |f, _| f.derivative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        Self::reduced(num, &self.denominator * &other.denominator)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-ExactRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduced(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::InvalidArgument("division by the zero rational function".into()));
        }
        Ok(Self::reduced(
            &self.numerator * &other.denominator,
            &self.denominator * &other.numerator,
        ))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::reduced(self.numerator.scale(c), self.denominator.clone())
    }

    /// Exact evaluation at a rational point.
    pub fn eval_exact(&self, x: &ExactRational) -> Result<ExactRational> {
        let d = self.denominator.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {x}")));
        }
        Ok(self.numerator.eval(x) / d)
    }

    /// Converts both parts once to working precision.
    pub fn to_numeric<R: Real>(&self) -> NumericRational<R> {
        NumericRational {
            numerator: self.numerator.map(R::from_rational),
            denominator: self.denominator.map(R::from_rational),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "[{}] / [{}]", self.numerator, self.denominator)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// A rational function rounded to working precision for repeated evaluation.
#[derive(Clone, Debug)]
pub struct NumericRational<R> {
    pub numerator: Poly<R>,
    pub denominator: Poly<R>,
}

impl<R: Real> NumericRational<R> {
    pub fn eval(&self, z: &Complex<R>) -> Result<Complex<R>> {
        let d = self.denominator.eval_complex(z);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {z}")));
        }
        Ok(self.numerator.eval_complex(z) / d)
    }

    pub fn eval_real(&self, x: &R) -> Result<R> {
        let d = self.denominator.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {x}")));
        }
        Ok(self.numerator.eval(x) / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> ExactRational {
        ExactRational::from_integer(BigInt::from(v))
    }

    fn ip(c: &[i64]) -> ExactPoly {
        Poly::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn stored_in_lowest_terms() {
        // (x^2 - 1) / (2x - 2) = (x + 1) / 2
        let f = RationalFunction::new(ip(&[-1, 0, 1]), ip(&[-2, 2])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &Poly::new(vec![q(1) / q(2), q(1) / q(2)]));
        assert_eq!(f.degree(), Some(1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(ip(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn degree_follows_numerator_minus_denominator() {
        // eta'/eta for eta = 8x^2 + 4 has degree -1
        let eta = ip(&[4, 0, 8]);
        let f = RationalFunction::new(eta.derivative(1), eta).unwrap();
        assert_eq!(f.degree(), Some(-1));
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/x = -1/x^2
        let f = RationalFunction::new(ip(&[1]), ip(&[0, 1])).unwrap();
        let df = f.derivative();
        assert_eq!(df, RationalFunction::new(ip(&[-1]), ip(&[0, 0, 1])).unwrap());
        assert_eq!(f.eval_exact(&q(2)).unwrap(), q(1) / q(2));
        assert!(f.eval_exact(&q(0)).is_err());
    }

    #[test]
    fn arithmetic_round_trip() {
        let f = RationalFunction::new(ip(&[1, 1]), ip(&[0, 1])).unwrap();
        let g = RationalFunction::new(ip(&[2]), ip(&[1, 1])).unwrap();
        let h = f.add(&g).sub(&g);
        assert_eq!(h, f);
        let k = f.mul(&g).div(&g).unwrap();
        assert_eq!(k, f);
    }
}
