use super::config::Configuration;
use super::weight::WeightEval;
use crate::error::Result;
use crate::scalar::Real;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Which objective the derivatives refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `log|T_ω(Y)|²`, used whenever complex points are present.
    AbsSquared,
    /// `log T_ω` for real configurations; every entry is half the `AbsSquared` one.
    Classical,
}

impl Convention {
    fn scale<R: Real>(self) -> R {
        match self {
            Convention::AbsSquared => R::one(),
            Convention::Classical => R::from_f64(0.5),
        }
    }
}

/// `(Δy, Δμ)` between points `i` and `j`.
fn offsets<R: Real>(c: &Configuration<R>, i: usize, j: usize) -> (R, R) {
    (c.y[i].clone() - c.y[j].clone(), c.mu_at(i) - c.mu_at(j))
}

/// `(ω'/ω)(z) + (ω'/ω)(z̄)` applied via `f`, for the real weight at point `i`.
fn weight_term<R: Real>(c: &Configuration<R>, i: usize, f: impl Fn(&Complex<R>) -> Result<Complex<R>>) -> Result<R> {
    let z = c.point(i);
    if i < c.n {
        Ok(f(&z)?.re * R::from_i64(2))
    } else {
        Ok((f(&z)? + f(&z.conj())?).re)
    }
}

/// Gradient of `log|T_ω(Y)|²` (or `log T_ω`) in the free coordinates `y`.
///
/// Entry `i` is `(ω'/ω)(z_i) + (ω'/ω)(z̄_i) + Σ_{j≠i} 4Δy/(Δy² + Δμ²)`.
pub fn gradient<R: Real>(c: &Configuration<R>, w: &WeightEval<R>, conv: Convention) -> Result<Vec<R>> {
    c.check_distinct()?;
    let four = R::from_i64(4);
    let scale: R = conv.scale();
    (0..c.len())
        .map(|i| {
            let mut g = weight_term(c, i, |z| w.dlog(z))?;
            for j in (0..c.len()).filter(|&j| j != i) {
                let (d, m) = offsets(c, i, j);
                g = g + four.clone() * d.clone() / (d.clone() * d + m.clone() * m);
            }
            Ok(g * scale.clone())
        })
        .collect()
}

/// Hessian of `-log|T_ω(Y)|²` (or `-log T_ω`).
///
/// Off-diagonal: `-4(Δy² - Δμ²)/(Δy² + Δμ²)²`. Diagonal: `-(ω'/ω)'` at `z_i`
/// and `z̄_i` plus the negated sum of the off-diagonal entries in the row.
pub fn hessian<R: Real>(c: &Configuration<R>, w: &WeightEval<R>, conv: Convention) -> Result<Vec<Vec<R>>> {
    c.check_distinct()?;
    let len = c.len();
    let four = R::from_i64(4);
    let scale: R = conv.scale();
    let mut h = vec![vec![R::zero(); len]; len];
    for i in 0..len {
        for j in i + 1..len {
            let (d, m) = offsets(c, i, j);
            let (d2, m2) = (d.clone() * d, m.clone() * m);
            let s = d2.clone() + m2.clone();
            let v = -(four.clone() * (d2 - m2)) / (s.clone() * s) * scale.clone();
            h[i][j] = v.clone();
            h[j][i] = v;
        }
    }
    for i in 0..len {
        let off: R = (0..len).filter(|&j| j != i).fold(R::zero(), |a, j| a + h[i][j].clone());
        let wt = -weight_term(c, i, |z| w.d2log(z))? * scale.clone();
        h[i][i] = wt - off;
    }
    Ok(h)
}

/// Central-difference gradient of `f` at `y`.
pub fn fd_gradient(f: impl Fn(&[f64]) -> Result<f64>, y: &[f64], step: f64) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(y.len());
    let mut probe = y.to_vec();
    for i in 0..y.len() {
        probe[i] = y[i] + step;
        let up = f(&probe)?;
        probe[i] = y[i] - step;
        let down = f(&probe)?;
        probe[i] = y[i];
        out.push((up - down) / (2.0 * step));
    }
    Ok(out)
}
