use super::weight::WeightEval;
use crate::error::{Error, Result};
use crate::roots::ZeroSet;
use crate::scalar::{ComplexExt, Real};
use num_complex::Complex;
use num_traits::Zero;

/// `n` free real points and `m` points `y_{n+t} + iμ_t` with fixed imaginary parts.
///
/// The `m` complex points are all the non-real zeros, so each conjugate pair
/// contributes one `μ` of each sign.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration<R> {
    pub y: Vec<R>,
    pub mu: Vec<R>,
    pub n: usize,
    pub m: usize,
}

impl<R: Real> Configuration<R> {
    /// `y` holds the `n` real coordinates followed by the `m` real parts.
    pub fn new(y: Vec<R>, mu: Vec<R>) -> Result<Self> {
        if mu.len() > y.len() {
            return Err(Error::InvalidConfiguration(format!(
                "{} imaginary parts for {} coordinates",
                mu.len(),
                y.len()
            )));
        }
        if let Some(k) = mu.iter().position(|v| v.is_zero() || !v.is_finite()) {
            return Err(Error::InvalidConfiguration(format!(
                "μ[{k}] must be finite and nonzero; enter it as a real point instead"
            )));
        }
        if let Some(k) = y.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidConfiguration(format!("y[{k}] is not finite")));
        }
        let m = mu.len();
        let n = y.len() - m;
        Ok(Configuration { y, mu, n, m })
    }

    /// Real-only configuration (`m = 0`).
    pub fn real(y: Vec<R>) -> Result<Self> {
        Self::new(y, Vec::new())
    }

    /// The zero configuration: reals first, then `x + iμ`, `x - iμ` per pair.
    pub fn from_zero_set(zs: &ZeroSet<R>) -> Self {
        let mut y = zs.real.clone();
        let mut mu = Vec::with_capacity(2 * zs.pairs.len());
        for pair in &zs.pairs {
            y.push(pair.x.clone());
            y.push(pair.x.clone());
            mu.push(pair.mu.clone());
            mu.push(-pair.mu.clone());
        }
        Configuration::new(y, mu).expect("zero sets have nonzero imaginary parts")
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    /// Imaginary part of point `i` (zero for the real block).
    pub fn mu_at(&self, i: usize) -> R {
        if i < self.n {
            R::zero()
        } else {
            self.mu[i - self.n].clone()
        }
    }

    pub fn point(&self, i: usize) -> Complex<R> {
        Complex::new(self.y[i].clone(), self.mu_at(i))
    }

    pub fn points(&self) -> Vec<Complex<R>> {
        (0..self.len()).map(|i| self.point(i)).collect()
    }

    /// Same `μ`, new free coordinates.
    pub fn with_y(&self, y: Vec<R>) -> Self {
        assert_eq!(y.len(), self.y.len(), "coordinate count must not change");
        Configuration { y, ..self.clone() }
    }

    /// Every point translated by the complex shift `z`.
    pub fn translated_points(&self, z: &Complex<R>) -> Vec<Complex<R>> {
        self.points().into_iter().map(|p| p + z.clone()).collect()
    }

    pub fn check_distinct(&self) -> Result<()> {
        check_distinct(&self.points())
    }
}

pub(crate) fn check_distinct<R: Real>(points: &[Complex<R>]) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (points[i].clone() - points[j].clone()).is_zero() {
                return Err(Error::CoincidentPoints { i, j });
            }
        }
    }
    Ok(())
}

/// `log T_ω = Σ log ω(z_j) + 2 Σ_{i<j} log(z_i - z_j)`, principal branch per factor.
/// The real part is `log|T_ω|` whatever the branch.
pub fn log_t<R: Real>(points: &[Complex<R>], w: &WeightEval<R>) -> Result<Complex<R>> {
    check_distinct(points)?;
    let two = R::from_i64(2);
    let mut acc: Complex<R> = Complex::zero();
    for (i, zi) in points.iter().enumerate() {
        acc = acc + w.log_weight(zi)?;
        for zj in &points[i + 1..] {
            acc = acc + (zi.clone() - zj.clone()).ln_principal().scale_by(&two);
        }
    }
    Ok(acc)
}

/// `log|T_ω(Y)|² = 2 Re log T_ω`.
pub fn log_abs_t_sq<R: Real>(c: &Configuration<R>, w: &WeightEval<R>) -> Result<R> {
    Ok(log_t(&c.points(), w)?.re * R::from_i64(2))
}

/// `log|T_ω(Y)|²` from the expanded real product: weights at `y_s` and at
/// `y ± iμ`, `|y_i - y_j|⁴`, and the squared sums `(Δy)² + (Δμ)²`.
pub fn log_abs_t_sq_expanded<R: Real>(c: &Configuration<R>, w: &WeightEval<R>) -> Result<R> {
    c.check_distinct()?;
    let (n, len) = (c.n, c.len());
    let f = R::from_i64;
    let mut acc = R::zero();
    for s in 0..n {
        acc = acc + w.log_weight(&Complex::from_real(c.y[s].clone()))?.re * f(2);
    }
    for t in n..len {
        let z = c.point(t);
        acc = acc + w.log_weight(&z)?.re + w.log_weight(&z.conj())?.re;
    }
    for i in 0..len {
        for j in i + 1..len {
            let dy = c.y[i].clone() - c.y[j].clone();
            let dm = c.mu_at(i) - c.mu_at(j);
            acc = acc + (dy.clone() * dy + dm.clone() * dm).ln() * f(2);
        }
    }
    Ok(acc)
}
