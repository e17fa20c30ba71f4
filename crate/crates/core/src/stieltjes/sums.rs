use super::ode::OdeCoefficients;
use crate::error::{Error, Result};
use crate::polycore::NumericRational;
use crate::scalar::{ComplexExt, Real};
use num_complex::Complex;
use num_traits::{One, Zero};

/// Minimum separation accepted by [`direct_sum`].
pub const COINCIDENCE_GUARD: f64 = 1e-13;

/// `S_{m,j} = Σ_{k≠j} 1/(z_j - z_k)^m` over the full list of zeros
/// (0-based `j`).
pub fn direct_sum<R: Real>(zeros: &[Complex<R>], m: u32, j: usize) -> Result<Complex<R>> {
    if j >= zeros.len() {
        return Err(Error::InvalidArgument(format!(
            "index {j} out of range for {} zeros",
            zeros.len()
        )));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("power m must be positive".into()));
    }
    let guard = R::from_f64(COINCIDENCE_GUARD);
    let one: Complex<R> = Complex::one();
    let mut acc: Complex<R> = Complex::zero();
    for (k, zk) in zeros.iter().enumerate() {
        if k == j {
            continue;
        }
        let d = zeros[j].clone() - zk.clone();
        if d.modulus() < guard {
            return Err(Error::CoincidentPoints { i: j, j: k });
        }
        let inv = one.clone() / d;
        acc = acc + cpow(&inv, m);
    }
    Ok(acc)
}

fn cpow<R: Real>(z: &Complex<R>, m: u32) -> Complex<R> {
    let mut acc: Complex<R> = Complex::one();
    for _ in 0..m {
        acc = acc * z.clone();
    }
    acc
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// ODE coefficients and their exact derivatives, rounded to precision `R`.
#[derive(Clone, Debug)]
pub struct OdeEval<R> {
    p: Vec<NumericRational<R>>,
    q: Vec<NumericRational<R>>,
    r: Vec<NumericRational<R>>,
}

impl OdeCoefficients {
    /// Prepares predictions up to `S_{max_order}`. Derivatives are taken
    /// exactly; rounding happens once here.
    pub fn eval<R: Real>(&self, max_order: usize) -> OdeEval<R> {
        let orders = max_order.max(3);
        let ders = |f: &crate::polycore::RationalFunction| {
            let mut out = Vec::with_capacity(orders);
            let mut g = f.clone();
            for _ in 0..orders {
                out.push(g.to_numeric());
                g = g.derivative();
            }
            out
        };
        OdeEval {
            p: ders(&self.p),
            q: ders(&self.q),
            r: ders(&self.r_minus_lambda),
        }
    }
}

impl<R: Real> OdeEval<R> {
    /// Largest `r` accepted by [`z_recurrence_predict`](Self::z_recurrence_predict).
    pub fn max_order(&self) -> usize {
        self.p.len()
    }

    fn p0(&self, x: &Complex<R>) -> Result<Complex<R>> {
        let p = self.p[0].eval(x)?;
        if p.is_zero() {
            return Err(Error::Pole(format!("p vanishes at {x}")));
        }
        Ok(p)
    }

    /// `S_{1,j} = -q/(2p)`.
    pub fn predict_s1(&self, x: &Complex<R>) -> Result<Complex<R>> {
        let p = self.p0(x)?;
        let q = self.q[0].eval(x)?;
        Ok(-q / p.scale_by(&R::from_i64(2)))
    }

    /// `S_{2,j} = (2[p'+q]S_1 + [q'+r])/(3p) + S_1²`.
    pub fn predict_s2(&self, x: &Complex<R>) -> Result<Complex<R>> {
        let p = self.p0(x)?;
        let s1 = self.predict_s1(x)?;
        let (dp, q, dq, r) = (
            self.p[1].eval(x)?,
            self.q[0].eval(x)?,
            self.q[1].eval(x)?,
            self.r[0].eval(x)?,
        );
        let num = (dp + q).scale_by(&R::from_i64(2)) * s1.clone() + dq + r;
        Ok(num / p.scale_by(&R::from_i64(3)) + s1.clone() * s1)
    }

    /// `S_{3,j} = -{3[2p'+q][S_1²-S_2] + 2[p''+2q'+r]S_1 + q'' + 2r'}/(8p) + (3/2)S_1 S_2 - (1/2)S_1³`.
    ///
    /// The `q'' + 2r'` term vanishes for polynomial `q` and constant `r`.
    pub fn predict_s3(&self, x: &Complex<R>) -> Result<Complex<R>> {
        let p = self.p0(x)?;
        let s1 = self.predict_s1(x)?;
        let s2 = self.predict_s2(x)?;
        let (dp, ddp, q, dq, ddq, r, dr) = (
            self.p[1].eval(x)?,
            self.p[2].eval(x)?,
            self.q[0].eval(x)?,
            self.q[1].eval(x)?,
            self.q[2].eval(x)?,
            self.r[0].eval(x)?,
            self.r[1].eval(x)?,
        );
        let f = R::from_i64;
        let a = (dp.scale_by(&f(2)) + q).scale_by(&f(3)) * (s1.clone() * s1.clone() - s2.clone());
        let b = (ddp + dq.scale_by(&f(2)) + r).scale_by(&f(2)) * s1.clone();
        let c = ddq + dr.scale_by(&f(2));
        let lead = -(a + b + c) / p.scale_by(&f(8));
        let s1_cubed = s1.clone() * s1.clone() * s1.clone();
        Ok(lead + (s1 * s2).scale_by(&(f(3) / f(2))) - s1_cubed.scale_by(&(f(1) / f(2))))
    }

    /// `S_{r,j}` from the Taylor data of `y` at the zero.
    ///
    /// Differentiating the ODE `s` times at `x_j` and dividing by `y'(x_j)`
    /// gives `y^{(s+2)}/y'` from lower orders. With `Z_i = y^{(i+1)}/((i+1)y')`
    /// the Taylor coefficients of `g = y/(y'(x_j)(x-x_j))`, the derivatives
    /// `L_k` of `g'/g` at `x_j` follow from `Z_{k+1} = Σ_i C(k,i) L_i Z_{k-i}`,
    /// and `S_r = (-1)^{r-1} L_{r-1}/(r-1)!`.
    pub fn z_recurrence_predict(&self, x: &Complex<R>, r: usize) -> Result<Complex<R>> {
        if r == 0 || r > self.max_order() {
            return Err(Error::InvalidArgument(format!(
                "order r = {r} outside 1..={}",
                self.max_order()
            )));
        }
        let f = |v: i64| R::from_i64(v);
        let p0 = self.p0(x)?;
        let pd = (0..r).map(|t| self.p[t].eval(x)).collect::<Result<Vec<_>>>()?;
        let qd = (0..r).map(|t| self.q[t].eval(x)).collect::<Result<Vec<_>>>()?;
        let rd = (0..r).map(|t| self.r[t].eval(x)).collect::<Result<Vec<_>>>()?;

        // w[k] = y^{(k)}(x_j) / y'(x_j)
        let mut w: Vec<Complex<R>> = vec![Complex::zero(), Complex::one()];
        let mut z: Vec<Complex<R>> = vec![Complex::one()];
        for s in 0..r {
            let mut acc: Complex<R> = Complex::zero();
            for t in 0..=s {
                let c = f(binom(s, t));
                let mut term = qd[t].clone() * w[s - t + 1].clone() + rd[t].clone() * w[s - t].clone();
                if t >= 1 {
                    term = term + pd[t].clone() * w[s - t + 2].clone();
                }
                acc = acc + term.scale_by(&c);
            }
            let next = -acc / p0.clone();
            z.push(next.scale_by(&(f(1) / f(s as i64 + 2))));
            w.push(next);
        }
        let mut l: Vec<Complex<R>> = Vec::with_capacity(r);
        for k in 0..r {
            let mut v = z[k + 1].clone();
            for (i, li) in l.iter().enumerate() {
                v = v - (li.clone() * z[k - i].clone()).scale_by(&f(binom(k, i)));
            }
            l.push(v);
        }
        let fact = (1..r as i64).fold(R::one(), |a, k| a * f(k));
        let sign = if (r - 1).is_multiple_of(2) { R::one() } else { -R::one() };
        Ok(l[r - 1].scale_by(&(sign / fact)))
    }
}
