use crate::energy::{gradient, log_abs_t_sq, Configuration, Convention, WeightEval, WeightSpec};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Controls for [`multistart_maximize`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultistartSpec {
    pub starts: usize,
    pub seed: u64,
    /// Box the free coordinates are drawn from.
    pub lower: f64,
    pub upper: f64,
    pub max_steps: usize,
    /// Convergence threshold on the gradient max-norm.
    pub grad_tol: f64,
}

impl MultistartSpec {
    /// 2000-step cap, `‖∇‖_∞ < 1e-10`, and the box `[lower, upper]`.
    pub fn new(starts: usize, seed: u64, lower: f64, upper: f64) -> Self {
        MultistartSpec {
            starts,
            seed,
            lower,
            upper,
            max_steps: 2000,
            grad_tol: 1e-10,
        }
    }

    /// Box covering 1.5 times the extreme real parts, clipped to the domain of `w`.
    pub fn around(starts: usize, seed: u64, xs: &[f64], w: &WeightSpec) -> Self {
        let reach = xs.iter().fold(0.0f64, |a, x| a.max(x.abs())).max(0.5) * 1.5;
        let (lo, hi) = w.domain().bounds();
        let inset = 1e-3;
        Self::new(starts, seed, (-reach).max(lo + inset), reach.min(hi - inset))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StartOutcome {
    pub start: usize,
    pub converged: bool,
    pub steps: usize,
    pub value: f64,
    pub grad_norm: f64,
    /// Terminal coordinates with the real block sorted.
    pub y: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultistartResult {
    pub spec: MultistartSpec,
    pub mu: Vec<f64>,
    pub best: StartOutcome,
    pub outcomes: Vec<StartOutcome>,
    /// Largest max-norm distance from a converged terminal point to the best one.
    pub dispersion: f64,
}

impl MultistartResult {
    /// Fraction of starts whose terminal point lies within `tol` of `target` (max-norm).
    pub fn fraction_within(&self, target: &[f64], tol: f64) -> f64 {
        let hits = self.outcomes.iter().filter(|o| max_dist(&o.y, target) <= tol).count();
        hits as f64 / self.outcomes.len() as f64
    }
}

fn max_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Objective<'a> {
    template: Configuration<f64>,
    w: &'a WeightEval<f64>,
}

impl Objective<'_> {
    /// `None` outside the domain or at a collision.
    fn value(&self, y: &[f64]) -> Option<f64> {
        let c = self.template.with_y(y.to_vec());
        if y[..c.n].iter().any(|x| !self.w.in_domain(x)) {
            return None;
        }
        log_abs_t_sq(&c, self.w).ok().filter(|v| v.is_finite())
    }

    fn gradient(&self, y: &[f64]) -> Result<Vec<f64>> {
        gradient(&self.template.with_y(y.to_vec()), self.w, Convention::AbsSquared)
    }
}

/// Gradient ascent on `log|T_ω(Y)|²` with Barzilai–Borwein trial steps and
/// Armijo backtracking.
fn ascend(obj: &Objective, mut y: Vec<f64>, spec: &MultistartSpec) -> Result<(Vec<f64>, f64, f64, usize, bool)> {
    let mut f = obj
        .value(&y)
        .ok_or_else(|| Error::InvalidConfiguration("start outside the domain".into()))?;
    let mut g = obj.gradient(&y)?;
    let norm = |g: &[f64]| g.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let mut t = 1e-2 / norm(&g).max(1.0);
    let mut prev: Option<(Vec<f64>, Vec<f64>)> = None;
    for step in 0..spec.max_steps {
        let gn = norm(&g);
        if gn < spec.grad_tol {
            return Ok((y, f, gn, step, true));
        }
        if let Some((py, pg)) = &prev {
            // BB1 for minimizing -f: s = Δy, r = -Δg
            let s: Vec<f64> = y.iter().zip(py).map(|(a, b)| a - b).collect();
            let r: Vec<f64> = pg.iter().zip(&g).map(|(a, b)| a - b).collect();
            let sr = dot(&s, &r);
            if sr > 0.0 {
                t = dot(&s, &s) / sr;
            }
        }
        let gg = dot(&g, &g);
        // below this, changes in f are rounding noise and ‖g‖ decides instead
        let flat = 1e3 * f64::EPSILON * f.abs().max(1.0);
        let mut accepted = None;
        for _ in 0..60 {
            let cand: Vec<f64> = y.iter().zip(&g).map(|(a, b)| a + t * b).collect();
            if let Some(fc) = obj.value(&cand) {
                if fc >= f + 1e-4 * t * gg {
                    accepted = Some((cand, fc, None));
                    break;
                }
                if (fc - f).abs() <= flat {
                    let gc = obj.gradient(&cand)?;
                    if norm(&gc) < gn {
                        accepted = Some((cand, fc, Some(gc)));
                        break;
                    }
                }
            }
            t *= 0.5;
        }
        let Some((cand, fc, gc)) = accepted else {
            // no ascent at working precision
            return Ok((y, f, gn, step, gn < spec.grad_tol));
        };
        let gc = match gc {
            Some(gc) => gc,
            None => obj.gradient(&cand)?,
        };
        prev = Some((std::mem::replace(&mut y, cand), std::mem::replace(&mut g, gc)));
        f = fc;
    }
    let gn = norm(&g);
    Ok((y, f, gn, spec.max_steps, gn < spec.grad_tol))
}

/// Multistart maximization of `log|T_ω|²` over `n` real and `m` complex
/// points whose imaginary parts are fixed at `mu`.
///
/// Starts are drawn uniformly from the box with a seeded ChaCha8 stream, so
/// results are reproducible for a given seed.
pub fn multistart_maximize(w: &WeightSpec, n: usize, mu: &[f64], spec: &MultistartSpec) -> Result<MultistartResult> {
    if spec.starts == 0 {
        return Err(Error::InvalidArgument("starts must be at least 1".into()));
    }
    if spec.lower >= spec.upper {
        return Err(Error::InvalidArgument(format!(
            "empty box [{}, {}]",
            spec.lower, spec.upper
        )));
    }
    let m = mu.len();
    let ev = w.eval::<f64>();
    let template = Configuration::new(vec![0.0; n + m], mu.to_vec())?;
    let obj = Objective { template, w: &ev };
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut outcomes = Vec::with_capacity(spec.starts);
    for start in 0..spec.starts {
        let y0: Vec<f64> = (0..n + m).map(|_| rng.gen_range(spec.lower..spec.upper)).collect();
        let outcome = match ascend(&obj, y0, spec) {
            Ok((mut y, value, grad_norm, steps, converged)) => {
                y[..n].sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
                StartOutcome {
                    start,
                    converged,
                    steps,
                    value,
                    grad_norm,
                    y,
                    error: None,
                }
            }
            Err(e) => StartOutcome {
                start,
                converged: false,
                steps: 0,
                value: f64::NEG_INFINITY,
                grad_norm: f64::NAN,
                y: Vec::new(),
                error: Some(e.to_string()),
            },
        };
        outcomes.push(outcome);
    }
    let best = outcomes
        .iter()
        .filter(|o| o.error.is_none())
        .max_by(|a, b| a.value.partial_cmp(&b.value).expect("finite values"))
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("every start failed".into()))?;
    let dispersion = outcomes
        .iter()
        .filter(|o| o.converged)
        .map(|o| max_dist(&o.y, &best.y))
        .fold(0.0, f64::max);
    Ok(MultistartResult {
        spec: spec.clone(),
        mu: mu.to_vec(),
        best,
        outcomes,
        dispersion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_rational, Family};

    fn hermite() -> WeightSpec {
        let z = parse_rational("0").unwrap();
        WeightSpec::classical(Family::Hermite, z.clone(), z).unwrap()
    }

    #[test]
    fn hermite_three_points() {
        let spec = MultistartSpec::new(50, 42, -2.0, 2.0);
        let r = multistart_maximize(&hermite(), 3, &[], &spec).unwrap();
        let a = 1.5f64.sqrt();
        assert!(r.fraction_within(&[-a, 0.0, a], 1e-6) >= 0.9);
        assert!(r.best.converged);
    }

    #[test]
    fn one_particle_goes_to_origin() {
        let spec = MultistartSpec::new(5, 1, -1.0, 1.0);
        let r = multistart_maximize(&hermite(), 1, &[], &spec).unwrap();
        assert!(r.best.y[0].abs() < 1e-10);
    }

    #[test]
    fn seeded_runs_repeat() {
        let spec = MultistartSpec::new(4, 7, -2.0, 2.0);
        let a = multistart_maximize(&hermite(), 2, &[], &spec).unwrap();
        let b = multistart_maximize(&hermite(), 2, &[], &spec).unwrap();
        assert_eq!(a.best.y, b.best.y);
    }

    #[test]
    fn bad_specs() {
        assert!(multistart_maximize(&hermite(), 2, &[], &MultistartSpec::new(0, 1, -1.0, 1.0)).is_err());
        assert!(multistart_maximize(&hermite(), 2, &[], &MultistartSpec::new(3, 1, 1.0, 1.0)).is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(8))]

        #[test]
        fn classical_zeros_are_never_beaten(seed in 0u64..1_000_000) {
            let w = hermite();
            let a = 1.5f64.sqrt();
            let zeros = Configuration::real(vec![-a, 0.0, a]).unwrap();
            let top = log_abs_t_sq(&zeros, &w.eval::<f64>()).unwrap();
            let r = multistart_maximize(&w, 3, &[], &MultistartSpec::new(5, seed, -2.0, 2.0)).unwrap();
            proptest::prop_assert!(r.outcomes.iter().all(|o| o.value <= top + 1e-9));
        }
    }
}
