use crate::energy::WeightSpec;
use crate::error::{Error, Result};
use crate::polycore::{
    classical_poly, exceptional_hermite, fit_ode_constant, Family, Partition, Poly, RationalFunction,
};
use crate::{ExactPoly, ExactRational};
use num_bigint::BigInt;

/// Coefficients of `p y'' + q y' + (r - λ) y = 0`.
///
/// Only the combination `r - λ` enters any relation, so it is stored as one
/// rational function.
#[derive(Clone, Debug, PartialEq)]
pub struct OdeCoefficients {
    pub p: RationalFunction,
    pub q: RationalFunction,
    pub r_minus_lambda: RationalFunction,
}

fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

fn eta_ratio(eta: &ExactPoly, order: usize) -> RationalFunction {
    RationalFunction::new(eta.derivative(order), eta.clone()).expect("η is nonzero")
}

impl OdeCoefficients {
    /// Checks the degree bounds `deg p ≤ 2`, `deg q ≤ 1`, `deg(r - λ) ≤ 0`
    /// (degree of a rational function being `deg num - deg den`).
    pub fn new(p: RationalFunction, q: RationalFunction, r_minus_lambda: RationalFunction) -> Result<Self> {
        let within = |f: &RationalFunction, bound: i64| f.degree().is_none_or(|d| d <= bound);
        if p.is_zero() {
            return Err(Error::InvalidArgument("p must be nonzero".into()));
        }
        for (name, f, bound) in [("p", &p, 2), ("q", &q, 1), ("r - λ", &r_minus_lambda, 0)] {
            if !within(f, bound) {
                return Err(Error::InvalidArgument(format!(
                    "deg({name}) = {:?} exceeds {bound}",
                    f.degree()
                )));
            }
        }
        Ok(OdeCoefficients { p, q, r_minus_lambda })
    }

    /// Coefficients attached to a weight: `p`, `q` from the weight and
    /// `r - λ` = (family η-terms) + `constant`.
    ///
    /// The η-terms are `η''/η + 2xη'/η` (Hermite), `xη''/η + (x-a)η'/η`
    /// (Laguerre) and `(1-x²)η''/η + [(a-b) + (a+b)x]η'/η` (Jacobi) with the
    /// weight exponents `a`, `b`.
    pub fn from_weight(w: &WeightSpec, constant: ExactRational) -> Result<Self> {
        let (a, b) = w.exponents();
        let e1 = eta_ratio(&w.eta, 1);
        let e2 = eta_ratio(&w.eta, 2);
        let polyf = |c: Vec<ExactRational>| RationalFunction::from_poly(Poly::new(c));
        let eta_terms = match w.family {
            Family::Hermite => e2.add(&e1.mul(&polyf(vec![int(0), int(2)]))),
            Family::Laguerre => e2
                .mul(&polyf(vec![int(0), int(1)]))
                .add(&e1.mul(&polyf(vec![-a.clone(), int(1)]))),
            Family::Jacobi => e2
                .mul(&polyf(vec![int(1), int(0), int(-1)]))
                .add(&e1.mul(&polyf(vec![a - b, a + b]))),
        };
        let r = eta_terms.add(&RationalFunction::constant(constant));
        Self::new(w.p.clone(), w.q.clone(), r)
    }

    /// Fits the constant in [`from_weight`](Self::from_weight) so that `y`
    /// is annihilated exactly.
    pub fn fit(w: &WeightSpec, y: &ExactPoly) -> Result<(Self, ExactRational)> {
        let base = Self::from_weight(w, int(0))?;
        let c = base.fit_constant(y)?;
        let ode = Self::from_weight(w, c.clone())?;
        Ok((ode, c))
    }

    /// The constant `C` with `p y'' + q y' + (r - λ + C) y ≡ 0`, if any.
    pub fn fit_constant(&self, y: &ExactPoly) -> Result<ExactRational> {
        if y.is_zero() {
            return Err(Error::NoOdeConstant("y is the zero polynomial".into()));
        }
        let minus_c = self.apply(y).div(&RationalFunction::from_poly(y.clone()))?;
        if minus_c.is_zero() {
            return Ok(int(0));
        }
        if minus_c.is_polynomial() && minus_c.numerator().degree() == Some(0) {
            Ok(-minus_c.numerator().coeff(0))
        } else {
            Err(Error::NoOdeConstant(format!(
                "(p y'' + q y' + (r-λ) y)/y = {minus_c} is not constant"
            )))
        }
    }

    /// `p y'' + q y' + (r - λ) y` as an exact rational function.
    pub fn apply(&self, y: &ExactPoly) -> RationalFunction {
        let f = |p: ExactPoly| RationalFunction::from_poly(p);
        self.p
            .mul(&f(y.derivative(2)))
            .add(&self.q.mul(&f(y.derivative(1))))
            .add(&self.r_minus_lambda.mul(&f(y.clone())))
    }

    pub fn annihilates(&self, y: &ExactPoly) -> bool {
        self.apply(y).is_zero()
    }

    /// ODE of the exceptional Hermite polynomial `H^{(λ)}_n`, with the
    /// constant recovered by [`fit_ode_constant`].
    pub fn exceptional_hermite(lambda: &Partition, n: u64) -> Result<Self> {
        let w = WeightSpec::exceptional_hermite(lambda)?;
        let y = exceptional_hermite(lambda, n)?;
        let c = fit_ode_constant(&y, &w.eta)?;
        // the Wronskian fit includes the η-terms; only C is left over
        Self::from_weight(&w, c)
    }

    /// Classical ODE with the usual eigenvalue (`2n`, `n`, `n(n+α+β+1)`).
    pub fn classical(family: Family, n: u64, alpha: ExactRational, beta: ExactRational) -> Result<Self> {
        let nq = int(n as i64);
        let c = match family {
            Family::Hermite => int(2) * nq,
            Family::Laguerre => nq,
            Family::Jacobi => nq.clone() * (nq + &alpha + &beta + int(1)),
        };
        let w = WeightSpec::classical(family, alpha, beta)?;
        Self::from_weight(&w, c)
    }
}

/// Convenience: classical polynomial and its ODE.
pub fn classical_with_ode(
    family: Family,
    n: u64,
    alpha: &ExactRational,
    beta: &ExactRational,
) -> Result<(ExactPoly, OdeCoefficients)> {
    let y = classical_poly(family, n as usize, alpha, beta)?;
    let ode = OdeCoefficients::classical(family, n, alpha.clone(), beta.clone())?;
    Ok((y, ode))
}
