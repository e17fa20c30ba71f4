use super::config::{log_abs_t_sq, Configuration};
use super::weight::{WeightEval, WeightKind, WeightSpec};
use crate::error::{Error, Result};
use crate::polycore::RationalFunction;
use crate::roots::ZeroSet;
use crate::scalar::{ser, Real};
use num_complex::Complex;
use serde::Serialize;

/// Tolerance on `(log ω)'' ≤ 0`.
pub const CONCAVITY_TOL: f64 = 1e-12;
/// Grid size used for the interval conditions when none is given.
pub const DEFAULT_GRID_POINTS: usize = 2001;

/// Extremum of a sampled quantity over a grid.
#[derive(Clone, Debug, Serialize)]
pub struct GridCheck {
    pub holds: bool,
    /// Largest (concavity) or smallest (positivity) sampled value.
    #[serde(serialize_with = "ser::real")]
    pub extreme: f64,
    pub at: f64,
    pub points: usize,
}

fn sample(f: &RationalFunction, w: &WeightSpec, grid: &[f64]) -> Result<Vec<f64>> {
    let num = f.to_numeric::<f64>();
    let dom = w.domain();
    grid.iter()
        .map(|x| {
            if !dom.contains(*x) {
                return Err(Error::OutsideDomain(x.to_string()));
            }
            num.eval_real(x)
        })
        .collect()
}

fn extreme(values: &[f64], grid: &[f64], largest: bool) -> (f64, f64) {
    let mut best = (if largest { f64::NEG_INFINITY } else { f64::INFINITY }, f64::NAN);
    for (v, x) in values.iter().zip(grid) {
        if (largest && *v > best.0) || (!largest && *v < best.0) {
            best = (*v, *x);
        }
    }
    best
}

/// `(log ω)'' = (q/p)' ≤ 1e-12` at every grid point.
pub fn check_log_concavity(w: &WeightSpec, grid: &[f64]) -> Result<GridCheck> {
    let second = w.q.div(&w.p)?.derivative();
    let values = sample(&second, w, grid)?;
    let (extreme, at) = extreme(&values, grid, true);
    Ok(GridCheck {
        holds: extreme <= CONCAVITY_TOL,
        extreme,
        at,
        points: grid.len(),
    })
}

/// `F = q p' - p q' = -p² (q/p)'`.
pub fn f_function(w: &WeightSpec) -> RationalFunction {
    w.q.mul(&w.p.derivative()).sub(&w.p.mul(&w.q.derivative()))
}

/// Minimum of `F` over the grid; `F > 0` required for classical weights,
/// `F ≥ 0` for exceptional ones.
pub fn check_f_positivity(w: &WeightSpec, grid: &[f64]) -> Result<GridCheck> {
    let values = sample(&f_function(w), w, grid)?;
    let (extreme, at) = extreme(&values, grid, false);
    let holds = match w.kind {
        WeightKind::Classical => extreme > 0.0,
        WeightKind::Exceptional => extreme >= 0.0,
    };
    Ok(GridCheck {
        holds,
        extreme,
        at,
        points: grid.len(),
    })
}

/// One inequality `lhs > rhs` at one zero.
#[derive(Clone, Debug, Serialize)]
pub struct IndexMargin {
    pub index: usize,
    #[serde(serialize_with = "ser::real")]
    pub lhs: f64,
    #[serde(serialize_with = "ser::real")]
    pub rhs: f64,
    /// `lhs - rhs`; `-inf` when a term of the sum has coincident real parts.
    #[serde(serialize_with = "ser::real")]
    pub margin: f64,
    pub holds: bool,
    /// Margin with the conjugate partner's term dropped (complex indices only).
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser::opt_real")]
    pub margin_without_partner: Option<f64>,
}

impl IndexMargin {
    fn new(index: usize, lhs: f64, rhs: f64, rhs_without_partner: Option<f64>) -> Self {
        let margin = lhs - rhs;
        IndexMargin {
            index,
            lhs,
            rhs,
            margin,
            holds: margin > 0.0,
            margin_without_partner: rhs_without_partner.map(|r| lhs - r),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionFlags {
    pub real_curvature: bool,
    pub complex_curvature: bool,
    pub eta_convexity: bool,
    pub complex_eta_at_zero: bool,
    pub complex_eta_at_real_part: bool,
    pub real_eta: bool,
    pub complex_eta: bool,
}

impl ConditionFlags {
    pub fn all(&self) -> bool {
        self.real_curvature
            && self.complex_curvature
            && self.eta_convexity
            && self.complex_eta_at_zero
            && self.complex_eta_at_real_part
            && self.real_eta
            && self.complex_eta
    }

    pub fn any_failed(&self) -> bool {
        !self.all()
    }
}

/// Margins of the sufficient conditions for a local maximum at a zero set.
///
/// Indices follow [`Configuration::from_zero_set`]: reals, then each pair
/// as `x + iμ`, `x - iμ`. Sums written over the complex block exclude the
/// index itself.
#[derive(Clone, Debug, Serialize)]
pub struct SufficientConditions {
    pub k_alpha: i64,
    /// `-2(log ω)''(x_i) > Σ_{j complex} 4/(x_i-x_j)²` for real `i`.
    pub real_curvature: Vec<IndexMargin>,
    /// `-(log ω)''(z_i) - (log ω)''(z̄_i) > Σ_{j≠i} 4/(x_i-x_j)²` for complex `i`.
    pub complex_curvature: Vec<IndexMargin>,
    /// `(log η)'' + k ≥ 0` on the grid.
    pub eta_convexity: GridCheck,
    /// `(log η)''(z_i) + k > Σ_{j complex, j≠i} 1/(x_i-x_j)²`, real part at `z_i`.
    pub complex_eta_at_zero: Vec<IndexMargin>,
    /// As above with `(log η)''` evaluated at `x_i = Re z_i`.
    pub complex_eta_at_real_part: Vec<IndexMargin>,
    /// `k + (log η)''(x_i) > Σ_{j complex} 1/(x_i-x_j)²` for real `i`.
    pub real_eta: Vec<IndexMargin>,
    /// `2k + (log η)''(z_i) + (log η)''(z̄_i) > Σ_{j≠i} 2/(x_i-x_j)²` for complex `i`.
    pub complex_eta: Vec<IndexMargin>,
    pub flags: ConditionFlags,
}

/// Real parts closer than this (relative) are treated as equal.
pub const COINCIDENT_REAL_PART: f64 = 1e-12;

/// `Σ_{j∈js, j≠i} c/(x_i-x_j)²`, with `+inf` for coincident real parts.
fn inverse_square_sum(xs: &[f64], i: usize, js: impl Iterator<Item = usize>, c: f64) -> f64 {
    js.filter(|&j| j != i)
        .map(|j| {
            let d = xs[i] - xs[j];
            if d.abs() <= COINCIDENT_REAL_PART * xs[i].abs().max(xs[j].abs()).max(1.0) {
                f64::INFINITY
            } else {
                c / (d * d)
            }
        })
        .sum()
}

fn partner(c: &Configuration<impl Real>, i: usize) -> usize {
    // pairs are stored adjacently: n + 2k (upper), n + 2k + 1 (lower)
    if (i - c.n).is_multiple_of(2) {
        i + 1
    } else {
        i - 1
    }
}

pub fn check_sufficient_conditions<R: Real>(
    w: &WeightSpec,
    zs: &ZeroSet<R>,
    grid_points: usize,
) -> Result<SufficientConditions> {
    let bad = w.eta_real_zeros_in_domain()?;
    if !bad.is_empty() {
        return Err(Error::IllPosedWeight(format!("η vanishes in the domain at {bad:?}")));
    }
    let ev: WeightEval<R> = w.eval();
    let c = Configuration::from_zero_set(zs);
    let (n, len) = (c.n, c.len());
    let k = w.k_alpha() as f64;
    let xs: Vec<f64> = c.y.iter().map(Real::to_f64).collect();
    let complex = || n..len;
    let eta_dd = |z: &Complex<R>| -> Result<f64> { Ok(ev.log_eta_dd(z)?.re.to_f64()) };
    let w_dd = |z: &Complex<R>| -> Result<f64> { Ok(ev.d2log(z)?.re.to_f64()) };

    let mut real_curvature = Vec::new();
    let mut real_eta = Vec::new();
    let mut complex_eta_at_zero = Vec::new();
    let mut complex_eta_at_real_part = Vec::new();
    for i in 0..n {
        let x = c.point(i);
        let ldd = eta_dd(&x)?;
        real_curvature.push(IndexMargin::new(
            i,
            -2.0 * w_dd(&x)?,
            inverse_square_sum(&xs, i, complex(), 4.0),
            None,
        ));
        let rhs1 = inverse_square_sum(&xs, i, complex(), 1.0);
        real_eta.push(IndexMargin::new(i, k + ldd, rhs1, None));
        complex_eta_at_zero.push(IndexMargin::new(i, ldd + k, rhs1, None));
        complex_eta_at_real_part.push(IndexMargin::new(i, ldd + k, rhs1, None));
    }
    let mut complex_curvature = Vec::new();
    let mut complex_eta = Vec::new();
    for i in complex() {
        let z = c.point(i);
        let zb = z.conj();
        let xr = Complex::from(c.y[i].clone());
        let p = partner(&c, i);
        let all_but = |coef: f64| inverse_square_sum(&xs, i, 0..len, coef);
        let all_but_partner = |coef: f64| inverse_square_sum(&xs, i, (0..len).filter(|&j| j != p), coef);
        let cplx_but = |coef: f64| inverse_square_sum(&xs, i, complex(), coef);
        let cplx_but_partner = |coef: f64| inverse_square_sum(&xs, i, complex().filter(|&j| j != p), coef);

        let curvature = -(w_dd(&z)? + w_dd(&zb)?);
        complex_curvature.push(IndexMargin::new(i, curvature, all_but(4.0), Some(all_but_partner(4.0))));
        let (ez, ezb, ex) = (eta_dd(&z)?, eta_dd(&zb)?, eta_dd(&xr)?);
        complex_eta_at_zero.push(IndexMargin::new(i, ez + k, cplx_but(1.0), Some(cplx_but_partner(1.0))));
        complex_eta_at_real_part.push(IndexMargin::new(i, ex + k, cplx_but(1.0), Some(cplx_but_partner(1.0))));
        complex_eta.push(IndexMargin::new(
            i,
            2.0 * k + ez + ezb,
            all_but(2.0),
            Some(all_but_partner(2.0)),
        ));
    }

    let grid = w.domain().grid(grid_points);
    let shifted = w
        .log_eta_second_derivative()
        .add(&RationalFunction::constant(crate::ExactRational::from_integer(
            w.k_alpha().into(),
        )));
    let values = sample(&shifted, w, &grid)?;
    let (min, at) = extreme(&values, &grid, false);
    let eta_convexity = GridCheck {
        holds: min >= 0.0,
        extreme: min,
        at,
        points: grid.len(),
    };

    let all = |v: &[IndexMargin]| v.iter().all(|m| m.holds);
    let flags = ConditionFlags {
        real_curvature: all(&real_curvature),
        complex_curvature: all(&complex_curvature),
        eta_convexity: eta_convexity.holds,
        complex_eta_at_zero: all(&complex_eta_at_zero),
        complex_eta_at_real_part: all(&complex_eta_at_real_part),
        real_eta: all(&real_eta),
        complex_eta: all(&complex_eta),
    };
    Ok(SufficientConditions {
        k_alpha: w.k_alpha(),
        real_curvature,
        complex_curvature,
        eta_convexity,
        complex_eta_at_zero,
        complex_eta_at_real_part,
        real_eta,
        complex_eta,
        flags,
    })
}

/// `log|T_ω|²` sampled while one coordinate moves toward an end of the domain.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryRay {
    pub index: usize,
    /// The end approached (`±inf` for unbounded ends).
    #[serde(serialize_with = "ser::real")]
    pub toward: f64,
    #[serde(serialize_with = "ser::reals")]
    pub values: Vec<f64>,
    /// The second half of the samples is strictly decreasing.
    pub decreasing_tail: bool,
}

/// Rays from the configuration toward each end of the domain, one
/// coordinate at a time. Finite ends are only approached by real points.
pub fn boundary_decay<R: Real>(c: &Configuration<R>, w: &WeightEval<R>, samples: usize) -> Result<Vec<BoundaryRay>> {
    let samples = samples.max(4);
    let (lo, hi) = w.domain.bounds();
    let extent = c.y.iter().fold(1.0f64, |a, v| a.max(v.to_f64().abs()));
    let mut rays = Vec::new();
    for i in 0..c.len() {
        let yi = c.y[i].to_f64();
        for end in [lo, hi] {
            let positions: Vec<f64> = if end.is_infinite() {
                (0..samples)
                    .map(|k| yi + end.signum() * extent * 2f64.powi(k as i32))
                    .collect()
            } else if i < c.n {
                (1..=samples)
                    .map(|k| end + (yi - end) * 2f64.powi(-(k as i32)))
                    .collect()
            } else {
                continue;
            };
            let mut values = Vec::with_capacity(samples);
            for pos in positions {
                let mut y = c.y.clone();
                y[i] = R::from_f64(pos);
                values.push(log_abs_t_sq(&c.with_y(y), w)?.to_f64());
            }
            let tail = &values[samples / 2..];
            let decreasing_tail = tail.windows(2).all(|p| p[1] < p[0]);
            rays.push(BoundaryRay {
                index: i,
                toward: end,
                values,
                decreasing_tail,
            });
        }
    }
    Ok(rays)
}
