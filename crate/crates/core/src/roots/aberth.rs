use crate::error::{Error, Result};
use crate::polycore::Poly;
use crate::scalar::{ComplexExt, Real};
use crate::ExactPoly;
use num_complex::Complex;
use num_traits::{One, Zero};

/// Iteration controls for [`find_roots`].
#[derive(Clone, Debug)]
pub struct RootOptions<R> {
    /// Relative Newton step at which a root counts as polished.
    pub tol: R,
    pub max_aberth_sweeps: usize,
    pub max_newton_steps: usize,
}

impl<R: Real> Default for RootOptions<R> {
    fn default() -> Self {
        RootOptions {
            tol: R::default_root_tol(),
            max_aberth_sweeps: 200,
            max_newton_steps: 100,
        }
    }
}

/// All complex roots of a polynomial with their final residuals `|p(z)|`.
#[derive(Clone, Debug)]
pub struct RootSet<R> {
    pub roots: Vec<Complex<R>>,
    pub residuals: Vec<R>,
}

struct Working<R> {
    p: Poly<R>,
    degree: usize,
    eps: R,
}

impl<R: Real> Working<R> {
    /// Rounding-noise floor of Horner evaluation at `z`.
    fn noise(&self, z: &Complex<R>) -> R {
        let scale = R::from_i64(4 * self.degree as i64 + 4) * self.eps.clone();
        scale * self.p.abs_eval_bound(&z.modulus())
    }

    fn rel(&self, step: &Complex<R>, z: &Complex<R>) -> R {
        let denom = z.modulus().max_of(self.eps.clone());
        step.modulus() / denom
    }
}

/// Cauchy bound: the unique positive root of `|a_n| x^n - Σ_{i<n} |a_i| x^i`.
/// Every root of `p` lies in the disc of this radius. Found by bisection
/// below the Fujiwara bound `2 max |a_{n-k}/a_n|^{1/k}`.
pub fn cauchy_bound<R: Real>(p: &Poly<R>) -> R {
    let n = p.degree().expect("nonzero polynomial");
    let lead = p.leading().expect("nonzero polynomial").abs();
    let ratios: Vec<f64> = p.coeffs()[..n]
        .iter()
        .map(|a| (a.abs() / lead.clone()).to_f64())
        .collect();
    let fujiwara = ratios
        .iter()
        .enumerate()
        .map(|(i, r)| 2.0 * r.powf(1.0 / (n - i) as f64))
        .fold(0.0, f64::max);
    if fujiwara == 0.0 {
        return R::zero();
    }
    // q(x)/x^n = 1 - Σ r_i x^{i-n} is increasing in x > 0
    let q = |x: f64| {
        1.0 - ratios
            .iter()
            .enumerate()
            .map(|(i, r)| r * x.powi(i as i32 - n as i32))
            .sum::<f64>()
    };
    let (mut lo, mut hi) = (0.0f64, fujiwara);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if q(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    R::from_f64(hi * (1.0 + 1e-12))
}

/// Finds every root of `p` at the precision of `R`.
///
/// Exact zero roots are split off first. The rest are found by Gauss–Seidel
/// Aberth–Ehrlich sweeps from a circle at the Cauchy bound, then each is
/// polished by Newton's method. A Newton step is only accepted if it does not
/// increase `|p(z)|`.
pub fn find_roots<R: Real>(p: &ExactPoly, opts: &RootOptions<R>) -> Result<RootSet<R>> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ConstantPolynomial),
    };
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced = Poly::new(p.coeffs()[zero_mult..].to_vec());
    let mut roots: Vec<Complex<R>> = vec![Complex::zero(); zero_mult];
    if degree > zero_mult {
        let w = Working {
            p: reduced.map(R::from_rational),
            degree: degree - zero_mult,
            eps: R::epsilon(),
        };
        let mut z = aberth_sweeps(&w, opts)?;
        for (k, zk) in z.iter_mut().enumerate() {
            *zk = newton_polish(&w, zk.clone(), opts).ok_or(Error::RootNonConvergence {
                phase: "Newton",
                index: zero_mult + k,
            })?;
        }
        roots.extend(z);
    }
    let full = p.map(R::from_rational);
    let residuals = roots.iter().map(|z| full.eval_complex(z).modulus()).collect();
    Ok(RootSet { roots, residuals })
}

fn initial_guesses<R: Real>(w: &Working<R>) -> Vec<Complex<R>> {
    let radius = cauchy_bound(&w.p);
    let n = w.degree;
    (0..n)
        .map(|k| {
            // offset keeps the start off the real axis and asymmetric
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex::new(
                radius.clone() * R::from_f64(theta.cos()),
                radius.clone() * R::from_f64(theta.sin()),
            )
        })
        .collect()
}

fn aberth_sweeps<R: Real>(w: &Working<R>, opts: &RootOptions<R>) -> Result<Vec<Complex<R>>> {
    let n = w.degree;
    let mut z = initial_guesses(w);
    if n == 1 {
        return Ok(z);
    }
    let one: Complex<R> = Complex::one();
    let mut last_unconverged = 0;
    for _ in 0..opts.max_aberth_sweeps {
        let mut all_converged = true;
        for k in 0..n {
            let (pv, dpv) = w.p.eval_with_derivative(&z[k]);
            if pv.modulus() <= w.noise(&z[k]) {
                continue;
            }
            let mut s: Complex<R> = Complex::zero();
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    s = s + one.clone() / (z[k].clone() - zj.clone());
                }
            }
            let denom = dpv - pv.clone() * s;
            if denom.is_zero() {
                // stationary point of the Aberth map; nudge and retry next sweep
                let bump = R::from_f64(1e-3) * z[k].modulus().max_of(R::one());
                z[k] = z[k].clone() + Complex::new(bump.clone(), bump);
                all_converged = false;
                last_unconverged = k;
                continue;
            }
            let corr = pv / denom;
            z[k] = z[k].clone() - corr.clone();
            if !z[k].is_finite_c() {
                return Err(Error::RootNonConvergence {
                    phase: "Aberth",
                    index: k,
                });
            }
            if w.rel(&corr, &z[k]) > opts.tol {
                all_converged = false;
                last_unconverged = k;
            }
        }
        if all_converged {
            return Ok(z);
        }
    }
    Err(Error::RootNonConvergence {
        phase: "Aberth",
        index: last_unconverged,
    })
}

fn newton_polish<R: Real>(w: &Working<R>, mut z: Complex<R>, opts: &RootOptions<R>) -> Option<Complex<R>> {
    let (mut pv, mut dpv) = w.p.eval_with_derivative(&z);
    for _ in 0..opts.max_newton_steps {
        let res = pv.modulus();
        if res.is_zero() {
            return Some(z);
        }
        if dpv.is_zero() {
            return None;
        }
        // once at the rounding floor, one more improving step is all we take
        let in_noise = res <= w.noise(&z);
        let mut step = pv.clone() / dpv.clone();
        let mut candidate = z.clone() - step.clone();
        let (mut cp, mut cdp) = w.p.eval_with_derivative(&candidate);
        let mut halvings = 0;
        while cp.modulus() > res {
            if in_noise || halvings == 30 {
                let slack = R::from_f64(1e3);
                let ok = in_noise || res <= slack * w.noise(&z);
                return ok.then_some(z);
            }
            step = step.scale_by(&R::from_f64(0.5));
            candidate = z.clone() - step.clone();
            (cp, cdp) = w.p.eval_with_derivative(&candidate);
            halvings += 1;
        }
        let small = w.rel(&step, &candidate) <= opts.tol;
        z = candidate;
        pv = cp;
        dpv = cdp;
        if small || in_noise {
            return Some(z);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{hermite, poly_from_strings};
    use crate::F256;

    fn sorted_by_re_im(mut v: Vec<Complex<f64>>) -> Vec<Complex<f64>> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    #[test]
    fn quadratic_examples() {
        let eta = poly_from_strings(&["4", "0", "8"]).unwrap();
        let r = find_roots::<f64>(&eta, &RootOptions::default()).unwrap();
        let h = 1.0 / 2f64.sqrt();
        let mut s = r.roots;
        s.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((s[0] - Complex::new(0.0, -h)).norm() < 1e-14);
        assert!((s[1] - Complex::new(0.0, h)).norm() < 1e-14);

        let r = find_roots::<f64>(&hermite(2), &RootOptions::default()).unwrap();
        let s = sorted_by_re_im(r.roots);
        assert!((s[0].re + h).abs() < 1e-14 && s[0].im.abs() < 1e-14);
        assert!((s[1].re - h).abs() < 1e-14);
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        // x^2 - 1: positive root of x^2 - 1 is 1
        let p = Poly::new(vec![-1.0, 0.0, 1.0]);
        assert!((cauchy_bound(&p) - 1.0f64).abs() < 1e-9);
        let h20 = hermite(20).map(f64::from_rational);
        let b = cauchy_bound(&h20);
        // largest zero of H_20 is about 5.3875
        assert!(b > 5.3875 && b < 20.0, "{b}");
    }

    #[test]
    fn exact_zero_root() {
        let x = poly_from_strings(&["0", "1"]).unwrap();
        let r = find_roots::<f64>(&x, &RootOptions::default()).unwrap();
        assert_eq!(r.roots, vec![Complex::new(0.0, 0.0)]);
        assert_eq!(r.residuals, vec![0.0]);
    }

    #[test]
    fn constant_rejected() {
        let c = poly_from_strings(&["3"]).unwrap();
        assert_eq!(
            find_roots::<f64>(&c, &RootOptions::default()).unwrap_err(),
            Error::ConstantPolynomial
        );
    }

    #[test]
    fn iteration_cap_is_an_error() {
        let opts = RootOptions {
            tol: 1e-13,
            max_aberth_sweeps: 1,
            max_newton_steps: 100,
        };
        let err = find_roots::<f64>(&hermite(12), &opts).unwrap_err();
        assert!(matches!(err, Error::RootNonConvergence { phase: "Aberth", .. }));
    }

    #[test]
    fn vieta_sum_at_both_precisions() {
        for n in [3usize, 8, 15, 20] {
            let p = hermite(n) + poly_from_strings(&["1", "3"]).unwrap();
            let lead = p.coeff(n);
            let expect = f64::from_rational(&(-p.coeff(n - 1) / lead));
            let r = find_roots::<f64>(&p, &RootOptions::default()).unwrap();
            let sum: Complex<f64> = r.roots.iter().sum();
            assert!((sum.re - expect).abs() <= 1e-12 * expect.abs().max(1.0), "n={n}");
            assert!(sum.im.abs() < 1e-11);

            let r = find_roots::<F256>(&p, &RootOptions::default()).unwrap();
            let sum = r.roots.iter().fold(Complex::<F256>::zero(), |a, z| a + z.clone());
            let expect = F256::from_rational(&(-p.coeff(n - 1) / p.coeff(n)));
            assert!((sum.re - expect).abs().to_f64() < 1e-29, "n={n}");
        }
    }

    #[test]
    fn residuals_are_tiny_at_256_bits() {
        let r = find_roots::<F256>(&hermite(10), &RootOptions::default()).unwrap();
        let lead = 1024.0;
        for res in r.residuals {
            assert!(res.to_f64() / lead < 1e-60);
        }
    }
}
