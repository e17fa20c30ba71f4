use crate::scalar::Real;
use num_complex::Complex;
use num_traits::{Num, One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and `degree()` returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `order`-th derivative.
    pub fn derivative(&self, order: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..order {
            if p.coeffs.len() <= 1 {
                return Poly::zero();
            }
            let mut k = T::zero();
            let coeffs = p
                .coeffs
                .iter()
                .skip(1)
                .map(|a| {
                    k = k.clone() + T::one();
                    a.clone() * k.clone()
                })
                .collect();
            p = Poly::new(coeffs);
        }
        p
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    /// Coefficient-wise conversion.
    pub fn map<U: Clone + Num, F: Fn(&T) -> U>(&self, f: F) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Long division over a field. Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Quotient of a division known to be exact; `None` if a remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Scales so the leading coefficient is one. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    ///
    /// Only meaningful for exact fields; `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `Some(0)` when only even powers occur, `Some(1)` when only odd ones do.
    pub fn has_parity(&self) -> Option<usize> {
        let even = self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero);
        let odd = self.coeffs.iter().step_by(2).all(Zero::is_zero);
        match (even, odd) {
            (true, _) => Some(0),
            (_, true) => Some(1),
            _ => None,
        }
    }
}

impl<R: Real> Poly<R> {
    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: &Complex<R>) -> Complex<R> {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, a| {
            acc * z.clone() + Complex::new(a.clone(), R::zero())
        })
    }

    /// Value and first derivative at `z` in one Horner pass.
    pub fn eval_with_derivative(&self, z: &Complex<R>) -> (Complex<R>, Complex<R>) {
        let mut p: Complex<R> = Complex::zero();
        let mut dp: Complex<R> = Complex::zero();
        for a in self.coeffs.iter().rev() {
            dp = dp * z.clone() + p.clone();
            p = p * z.clone() + Complex::new(a.clone(), R::zero());
        }
        (p, dp)
    }

    /// `sum |a_k| |z|^k`, the scale of rounding error in Horner evaluation at `z`.
    pub fn abs_eval_bound(&self, z_abs: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, a| acc * z_abs.clone() + a.abs())
    }
}

impl<T: Clone + Num> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Clone + Num> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Self) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Clone + Num> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Clone + Num> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: fmt::Display + Clone + Num> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactPoly;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ip(c: &[i64]) -> ExactPoly {
        Poly::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = ip(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[0]).degree(), None);
    }

    #[test]
    fn derivative_matches_hand_values() {
        // 16x^4 - 48x^2 + 12 -> 64x^3 - 96x
        let h4 = ip(&[12, 0, -48, 0, 16]);
        assert_eq!(h4.derivative(1), ip(&[0, -96, 0, 64]));
        assert_eq!(ip(&[0, 2]).derivative(1), ip(&[2]));
        assert!(ip(&[7]).derivative(1).is_zero());
        assert_eq!(h4.derivative(4), ip(&[384]));
        assert!(h4.derivative(5).is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = ip(&[-1, 0, 1]);
        let b = ip(&[-1, 1]);
        assert_eq!(a.gcd(&b), ip(&[-1, 1]));
        let p = ip(&[4, 0, 8]);
        assert_eq!(Poly::zero().gcd(&p), p.monic());
        assert_eq!(p.gcd(&Poly::zero()), p.monic());
    }

    #[test]
    fn complex_horner() {
        let p = ip(&[4, 0, 8]).map(f64::from_rational);
        let z = Complex::new(0.0, 1.0 / 2f64.sqrt());
        let (v, dv) = p.eval_with_derivative(&z);
        assert!(v.norm() < 1e-14);
        assert!((dv - Complex::new(0.0, 16.0 / 2f64.sqrt())).norm() < 1e-13);
    }

    #[test]
    fn parity_detection() {
        assert_eq!(ip(&[1, 0, 3]).has_parity(), Some(0));
        assert_eq!(ip(&[0, 1, 0, 3]).has_parity(), Some(1));
        assert_eq!(ip(&[1, 1]).has_parity(), None);
    }

    fn arb_poly() -> impl Strategy<Value = ExactPoly> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| ip(&c))
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (qt, r) = a.div_rem(&b);
            prop_assert_eq!(&(&qt * &b) + &r, a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derivative(1);
            let rhs = &(&a.derivative(1) * &b) + &(&a * &b.derivative(1));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
