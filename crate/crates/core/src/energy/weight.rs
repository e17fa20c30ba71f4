use crate::error::{Error, Result};
use crate::polycore::{eta_hermite, Family, NumericRational, Partition, Poly, RationalFunction};
use crate::roots::{find_roots, RootOptions};
use crate::scalar::{ComplexExt, Real};
use crate::{ExactPoly, ExactRational};
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Classical,
    Exceptional,
}

/// Open interval of orthogonality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// `(-∞, ∞)`
    RealLine,
    /// `(0, ∞)`
    PositiveHalfLine,
    /// `(-1, 1)`
    SymmetricUnit,
}

impl Domain {
    pub fn for_family(f: Family) -> Domain {
        match f {
            Family::Hermite => Domain::RealLine,
            Family::Laguerre => Domain::PositiveHalfLine,
            Family::Jacobi => Domain::SymmetricUnit,
        }
    }

    pub fn bounds(&self) -> (f64, f64) {
        match self {
            Domain::RealLine => (f64::NEG_INFINITY, f64::INFINITY),
            Domain::PositiveHalfLine => (0.0, f64::INFINITY),
            Domain::SymmetricUnit => (-1.0, 1.0),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let (lo, hi) = self.bounds();
        x > lo && x < hi
    }

    /// Finite sampling window used for grid checks.
    pub fn grid_window(&self) -> (f64, f64) {
        match self {
            Domain::RealLine => (-6.0, 6.0),
            Domain::PositiveHalfLine => (1e-3, 30.0),
            Domain::SymmetricUnit => (-1.0 + 1e-3, 1.0 - 1e-3),
        }
    }

    /// `points` equispaced samples of [`grid_window`](Self::grid_window), endpoints included.
    pub fn grid(&self, points: usize) -> Vec<f64> {
        let (lo, hi) = self.grid_window();
        let points = points.max(2);
        (0..points)
            .map(|k| lo + (hi - lo) * k as f64 / (points - 1) as f64)
            .collect()
    }
}

fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

fn poly(c: &[ExactRational]) -> ExactPoly {
    Poly::new(c.to_vec())
}

fn rf(p: ExactPoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

/// `η'/η`.
fn eta_log_derivative(eta: &ExactPoly) -> RationalFunction {
    RationalFunction::new(eta.derivative(1), eta.clone()).expect("η is nonzero")
}

/// Energy weight `ω = ω̂ · p_factor` with `ω̂` from the Hermite, Laguerre or
/// Jacobi row, together with the ODE coefficients `p`, `q` it satisfies.
///
/// `ω̂` is `e^{-x²}/η²`, `x^a e^{-x}/η²` or `(1-x)^a (1+x)^b/η²`. For
/// classical and exceptional Hermite weights `a = α`, `b = β`; the
/// exceptional Laguerre and Jacobi constructors shift them by the `k'`
/// constants so that the Pearson equation `(pω̂)' = qω̂` holds.
#[derive(Clone, Debug)]
pub struct WeightSpec {
    pub family: Family,
    pub kind: WeightKind,
    pub alpha: ExactRational,
    pub beta: ExactRational,
    exp_a: ExactRational,
    exp_b: ExactRational,
    pub eta: ExactPoly,
    pub p: RationalFunction,
    pub q: RationalFunction,
    pub p_factor: ExactPoly,
}

impl WeightSpec {
    fn check_params(family: Family, alpha: &ExactRational, beta: &ExactRational) -> Result<()> {
        let m1 = -ExactRational::one();
        let bad = match family {
            Family::Hermite => false,
            Family::Laguerre => *alpha <= m1,
            Family::Jacobi => *alpha <= m1 || *beta <= m1,
        };
        if bad {
            return Err(Error::ParameterOutOfRange(format!(
                "{family} weight needs α, β > -1 (got α = {alpha}, β = {beta})"
            )));
        }
        Ok(())
    }

    /// Classical weight with `p_factor = p`.
    pub fn classical(family: Family, alpha: ExactRational, beta: ExactRational) -> Result<Self> {
        Self::check_params(family, &alpha, &beta)?;
        let (p, q) = match family {
            Family::Hermite => (poly(&[int(1)]), poly(&[int(0), int(-2)])),
            Family::Laguerre => (poly(&[int(0), int(1)]), poly(&[alpha.clone() + int(1), int(-1)])),
            Family::Jacobi => (
                poly(&[int(1), int(0), int(-1)]),
                poly(&[&beta - &alpha, -(&alpha + &beta + int(2))]),
            ),
        };
        Ok(WeightSpec {
            family,
            kind: WeightKind::Classical,
            exp_a: alpha.clone(),
            exp_b: beta.clone(),
            alpha,
            beta,
            eta: Poly::one(),
            p_factor: p.clone(),
            p: rf(p),
            q: rf(q),
        })
    }

    /// Exceptional Hermite weight `e^{-x²}/η_λ²` (times `p = 1`).
    pub fn exceptional_hermite(lambda: &Partition) -> Result<Self> {
        let eta = eta_hermite(lambda)?;
        let two = int(2);
        let q = rf(poly(&[int(0), int(-2)])).sub(&eta_log_derivative(&eta).scale(&two));
        Ok(WeightSpec {
            family: Family::Hermite,
            kind: if eta.is_constant() {
                WeightKind::Classical
            } else {
                WeightKind::Exceptional
            },
            alpha: int(0),
            beta: int(0),
            exp_a: int(0),
            exp_b: int(0),
            eta,
            p: rf(Poly::one()),
            q,
            p_factor: Poly::one(),
        })
    }

    /// Exceptional Laguerre weight from user-supplied `η`, `α` and `k'`;
    /// `ω̂ = x^{α+k'} e^{-x}/η²`, `p = x`, `q = α+k'+1-x-2xη'/η`.
    pub fn exceptional_laguerre(eta: ExactPoly, alpha: ExactRational, k_prime: ExactRational) -> Result<Self> {
        Self::check_params(Family::Laguerre, &alpha, &int(0))?;
        if eta.is_zero() {
            return Err(Error::IllPosedWeight("η is the zero polynomial".into()));
        }
        let a = &alpha + &k_prime;
        let x = poly(&[int(0), int(1)]);
        let q =
            rf(poly(&[a.clone() + int(1), int(-1)])).sub(&eta_log_derivative(&eta).mul(&rf(x.clone())).scale(&int(2)));
        Ok(WeightSpec {
            family: Family::Laguerre,
            kind: WeightKind::Exceptional,
            alpha,
            beta: int(0),
            exp_a: a,
            exp_b: int(0),
            eta,
            p: rf(x.clone()),
            q,
            p_factor: x,
        })
    }

    /// Exceptional Jacobi weight from user-supplied `η`, `α`, `β`, `k'_1`, `k'_2`;
    /// `ω̂ = (1-x)^{α+k'_1+k'_2} (1+x)^{β+k'_1-k'_2}/η²`, `p = 1-x²`,
    /// `q = β-α-2k'_2 - (α+β+2k'_1+2)x - 2(1-x²)η'/η`.
    pub fn exceptional_jacobi(
        eta: ExactPoly,
        alpha: ExactRational,
        beta: ExactRational,
        k1_prime: ExactRational,
        k2_prime: ExactRational,
    ) -> Result<Self> {
        Self::check_params(Family::Jacobi, &alpha, &beta)?;
        if eta.is_zero() {
            return Err(Error::IllPosedWeight("η is the zero polynomial".into()));
        }
        let a = &alpha + &k1_prime + &k2_prime;
        let b = &beta + &k1_prime - &k2_prime;
        let p = poly(&[int(1), int(0), int(-1)]);
        let q =
            rf(poly(&[&b - &a, -(&a + &b + int(2))])).sub(&eta_log_derivative(&eta).mul(&rf(p.clone())).scale(&int(2)));
        Ok(WeightSpec {
            family: Family::Jacobi,
            kind: WeightKind::Exceptional,
            alpha,
            beta,
            exp_a: a,
            exp_b: b,
            eta,
            p: rf(p.clone()),
            q,
            p_factor: p,
        })
    }

    /// Replaces the polynomial multiplying `ω̂`.
    pub fn with_p_factor(mut self, p_factor: ExactPoly) -> Result<Self> {
        if p_factor.is_zero() {
            return Err(Error::IllPosedWeight("p_factor is the zero polynomial".into()));
        }
        self.p_factor = p_factor;
        Ok(self)
    }

    pub fn domain(&self) -> Domain {
        Domain::for_family(self.family)
    }

    /// Exponents `(a, b)` of the Laguerre/Jacobi factors of `ω̂`.
    pub fn exponents(&self) -> (&ExactRational, &ExactRational) {
        (&self.exp_a, &self.exp_b)
    }

    /// `k_α`: 1 for Hermite, 0 for Laguerre and Jacobi.
    pub fn k_alpha(&self) -> i64 {
        match self.family {
            Family::Hermite => 1,
            _ => 0,
        }
    }

    /// `(log ω̂)'` from the closed form of the weight (not from `q`).
    pub fn log_hat_derivative(&self) -> RationalFunction {
        let family_term = match self.family {
            Family::Hermite => rf(poly(&[int(0), int(-2)])),
            Family::Laguerre => {
                // a/x - 1
                RationalFunction::new(poly(&[self.exp_a.clone(), int(-1)]), poly(&[int(0), int(1)]))
                    .expect("nonzero denominator")
            }
            Family::Jacobi => {
                // a/(x-1) + b/(x+1)
                let t1 = RationalFunction::new(poly(std::slice::from_ref(&self.exp_a)), poly(&[int(-1), int(1)]))
                    .expect("nonzero denominator");
                let t2 = RationalFunction::new(poly(std::slice::from_ref(&self.exp_b)), poly(&[int(1), int(1)]))
                    .expect("nonzero denominator");
                t1.add(&t2)
            }
        };
        family_term.sub(&eta_log_derivative(&self.eta).scale(&int(2)))
    }

    /// `(log ω)' = (log ω̂)' + p_factor'/p_factor`.
    pub fn log_derivative(&self) -> RationalFunction {
        let pf =
            RationalFunction::new(self.p_factor.derivative(1), self.p_factor.clone()).expect("p_factor is nonzero");
        self.log_hat_derivative().add(&pf)
    }

    pub fn log_second_derivative(&self) -> RationalFunction {
        self.log_derivative().derivative()
    }

    /// `(log η)'' = η''/η - (η'/η)²`.
    pub fn log_eta_second_derivative(&self) -> RationalFunction {
        eta_log_derivative(&self.eta).derivative()
    }

    /// Largest normalized Pearson residual `|p' + p(log ω̂)' - q| / (|q| + |p| + |p'|)`
    /// over `points` samples of the domain window.
    pub fn pearson_residual(&self, points: usize) -> Result<f64> {
        let p = self.p.to_numeric::<f64>();
        let dp = self.p.derivative().to_numeric::<f64>();
        let q = self.q.to_numeric::<f64>();
        let l = self.log_hat_derivative().to_numeric::<f64>();
        let mut worst = 0.0f64;
        for x in self.domain().grid(points) {
            let (pv, dpv, qv, lv) = (p.eval_real(&x)?, dp.eval_real(&x)?, q.eval_real(&x)?, l.eval_real(&x)?);
            let r = (dpv + pv * lv - qv).abs() / (qv.abs() + pv.abs() + dpv.abs());
            worst = worst.max(r);
        }
        Ok(worst)
    }

    /// Real zeros of η inside the domain (none for a well-posed weight).
    pub fn eta_real_zeros_in_domain(&self) -> Result<Vec<f64>> {
        if self.eta.is_constant() {
            return Ok(Vec::new());
        }
        let roots = find_roots::<f64>(&self.eta, &RootOptions::default())?;
        Ok(roots
            .roots
            .iter()
            .filter(|z| z.im.abs() <= 1e-10 * z.norm().max(1.0) && self.domain().contains(z.re))
            .map(|z| z.re)
            .collect())
    }

    /// Rejects weights whose η vanishes in the domain or whose `(p, q)` fail
    /// the Pearson equation on a 101-point grid to 1e-10.
    pub fn validate(&self) -> Result<()> {
        let zeros = self.eta_real_zeros_in_domain()?;
        if !zeros.is_empty() {
            return Err(Error::IllPosedWeight(format!("η vanishes in the domain at {zeros:?}")));
        }
        let r = self.pearson_residual(101)?;
        if r.is_nan() || r >= 1e-10 {
            return Err(Error::IllPosedWeight(format!("Pearson residual {r:e} exceeds 1e-10")));
        }
        Ok(())
    }

    /// Numeric evaluator at working precision `R`.
    pub fn eval<R: Real>(&self) -> WeightEval<R> {
        WeightEval {
            family: self.family,
            domain: self.domain(),
            a: R::from_rational(&self.exp_a),
            b: R::from_rational(&self.exp_b),
            eta: self.eta.map(R::from_rational),
            p_factor: self.p_factor.map(R::from_rational),
            dlog: self.log_derivative().to_numeric(),
            d2log: self.log_second_derivative().to_numeric(),
            log_eta_dd: self.log_eta_second_derivative().to_numeric(),
            p: self.p.to_numeric(),
            spec: self.clone(),
        }
    }
}

/// A [`WeightSpec`] with every coefficient rounded once to precision `R`.
#[derive(Clone, Debug)]
pub struct WeightEval<R> {
    pub spec: WeightSpec,
    pub family: Family,
    pub domain: Domain,
    a: R,
    b: R,
    eta: Poly<R>,
    p_factor: Poly<R>,
    dlog: NumericRational<R>,
    d2log: NumericRational<R>,
    log_eta_dd: NumericRational<R>,
    p: NumericRational<R>,
}

impl<R: Real> WeightEval<R> {
    /// `log ω(z)` on the principal branch of each factor. The real part is
    /// `log|ω(z)|` regardless of branch.
    pub fn log_weight(&self, z: &Complex<R>) -> Result<Complex<R>> {
        let one: Complex<R> = Complex::one();
        let family_term = match self.family {
            Family::Hermite => -(z.clone() * z.clone()),
            Family::Laguerre => {
                if z.is_zero() {
                    return Err(Error::Pole("weight singular at z = 0".into()));
                }
                z.ln_principal().scale_by(&self.a) - z.clone()
            }
            Family::Jacobi => {
                let l = one.clone() - z.clone();
                let r = one.clone() + z.clone();
                if l.is_zero() || r.is_zero() {
                    return Err(Error::Pole(format!("weight singular at z = {z}")));
                }
                l.ln_principal().scale_by(&self.a) + r.ln_principal().scale_by(&self.b)
            }
        };
        let e = self.eta.eval_complex(z);
        if e.is_zero() {
            return Err(Error::Pole(format!("η vanishes at {z}")));
        }
        let pf = self.p_factor.eval_complex(z);
        if pf.is_zero() {
            return Err(Error::Pole(format!("p_factor vanishes at {z}")));
        }
        Ok(family_term - e.ln_principal().scale_by(&R::from_i64(2)) + pf.ln_principal())
    }

    /// `(log ω)'(z)`.
    pub fn dlog(&self, z: &Complex<R>) -> Result<Complex<R>> {
        self.dlog.eval(z)
    }

    /// `(log ω)''(z)`.
    pub fn d2log(&self, z: &Complex<R>) -> Result<Complex<R>> {
        self.d2log.eval(z)
    }

    /// `(log η)''(z)`.
    pub fn log_eta_dd(&self, z: &Complex<R>) -> Result<Complex<R>> {
        self.log_eta_dd.eval(z)
    }

    /// ODE leading coefficient `p(x)`.
    pub fn p(&self, x: &R) -> Result<R> {
        self.p.eval_real(x)
    }

    pub fn in_domain(&self, x: &R) -> bool {
        self.domain.contains(x.to_f64())
    }
}
