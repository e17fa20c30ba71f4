use crate::energy::{log_t, Configuration, WeightSpec};
use crate::error::{Error, Result};
use crate::roots::ZeroSet;
use crate::scalar::{ser, Real};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Grid of the translation scan `f(z) = |T_ω(Z + z) / T_ω(Z)|`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanSpec {
    /// Half-width `w` of the real segment `[-w, w]`.
    pub half_width: f64,
    pub real_samples: usize,
    /// Radius `ρ` of the circle `|z| = ρ`.
    pub radius: f64,
    pub circle_samples: usize,
    /// Classification margin `ε` on `log f`.
    pub epsilon: f64,
}

impl Default for ScanSpec {
    fn default() -> Self {
        ScanSpec {
            half_width: 0.2,
            real_samples: 401,
            radius: 0.05,
            circle_samples: 360,
            epsilon: 1e-8,
        }
    }
}

impl ScanSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = self.half_width > 0.0
            && self.radius > 0.0
            && self.epsilon > 0.0
            && self.real_samples >= 3
            && self.circle_samples >= 3;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("scan spec out of range: {self:?}")))
        }
    }

    /// Same window with twice the sample density.
    pub fn doubled(&self) -> ScanSpec {
        ScanSpec {
            real_samples: 2 * self.real_samples - 1,
            circle_samples: 2 * self.circle_samples,
            ..self.clone()
        }
    }

    /// Real grid `-w..w`; the middle sample is exactly 0 for odd counts.
    pub fn real_grid(&self) -> Vec<f64> {
        let n = self.real_samples;
        let mid = (n - 1) as f64 / 2.0;
        (0..n).map(|k| self.half_width * (k as f64 - mid) / mid).collect()
    }

    pub fn circle_grid(&self) -> Vec<Complex<f64>> {
        let n = self.circle_samples;
        (0..n)
            .map(|k| Complex::from_polar(self.radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleKind {
    Real,
    Circle,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSample {
    pub kind: SampleKind,
    #[serde(serialize_with = "ser::complex")]
    pub z: Complex<f64>,
    /// `None` when the shifted configuration collided or hit a singularity.
    pub log_f: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Scan {
    pub spec: ScanSpec,
    pub samples: Vec<ScanSample>,
}

impl Scan {
    pub fn real(&self) -> impl Iterator<Item = &ScanSample> {
        self.samples.iter().filter(|s| s.kind == SampleKind::Real)
    }

    pub fn circle(&self) -> impl Iterator<Item = &ScanSample> {
        self.samples.iter().filter(|s| s.kind == SampleKind::Circle)
    }

    pub fn skipped(&self) -> usize {
        self.samples.iter().filter(|s| s.log_f.is_none()).count()
    }
}

/// `log f(z) = Re[log T_ω(Z + z) - log T_ω(Z)]` over the real segment and the circle.
pub fn scan_f<R: Real>(zs: &ZeroSet<R>, w: &WeightSpec, spec: &ScanSpec) -> Result<Scan> {
    spec.validate()?;
    let ev = w.eval::<R>();
    let c = Configuration::from_zero_set(zs);
    let base = log_t(&c.points(), &ev)?.re;
    let eval = |z: Complex<f64>| -> Option<f64> {
        let shift = Complex::new(R::from_f64(z.re), R::from_f64(z.im));
        let v = log_t(&c.translated_points(&shift), &ev).ok()?;
        Some((v.re - base.clone()).to_f64())
    };
    let mut samples = Vec::with_capacity(spec.real_samples + spec.circle_samples);
    for x in spec.real_grid() {
        let z = Complex::new(x, 0.0);
        samples.push(ScanSample {
            kind: SampleKind::Real,
            z,
            log_f: eval(z),
        });
    }
    for z in spec.circle_grid() {
        samples.push(ScanSample {
            kind: SampleKind::Circle,
            z,
            log_f: eval(z),
        });
    }
    Ok(Scan {
        spec: spec.clone(),
        samples,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanClass {
    RealMaxAndSaddle,
    RealMaxOnly,
    Neither,
    Inconclusive,
}

impl std::fmt::Display for ScanClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ScanClass::RealMaxAndSaddle => "real-max-and-saddle",
            ScanClass::RealMaxOnly => "real-max-only",
            ScanClass::Neither => "neither",
            ScanClass::Inconclusive => "inconclusive",
        })
    }
}

/// Extremes of a scan used by [`classify_scan`].
#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub class: ScanClass,
    /// Largest `log f` over real samples with `z ≠ 0`, and where.
    pub real_max: f64,
    pub real_argmax: f64,
    /// Smallest slack `-log f - ε (z/w)²` over real `z ≠ 0`; positive iff real-max.
    pub real_max_margin: f64,
    pub circle_max: f64,
    pub circle_min: f64,
    pub skipped: usize,
}

/// Real maximum: `log f(z) < -ε (z/w)²` at every real sample `z ≠ 0`.
/// Saddle: circle values both above `ε` and below `-ε`.
/// Neither: some real sample above `ε`.
pub fn classify_scan(scan: &Scan) -> ScanSummary {
    let eps = scan.spec.epsilon;
    let w = scan.spec.half_width;
    let mut real_max = f64::NEG_INFINITY;
    let mut real_argmax = f64::NAN;
    let mut real_max_margin = f64::INFINITY;
    for s in scan.real().filter(|s| s.z.re != 0.0) {
        let Some(v) = s.log_f else { continue };
        if v > real_max {
            real_max = v;
            real_argmax = s.z.re;
        }
        let t = s.z.re / w;
        real_max_margin = real_max_margin.min(-v - eps * t * t);
    }
    let circle: Vec<f64> = scan.circle().filter_map(|s| s.log_f).collect();
    let circle_max = circle.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let circle_min = circle.iter().cloned().fold(f64::INFINITY, f64::min);
    let real_is_max = real_max_margin > 0.0 && real_max.is_finite();
    let saddle = circle_max > eps && circle_min < -eps;
    let class = if real_max > eps {
        ScanClass::Neither
    } else if real_is_max && saddle {
        ScanClass::RealMaxAndSaddle
    } else if real_is_max {
        ScanClass::RealMaxOnly
    } else {
        ScanClass::Inconclusive
    };
    ScanSummary {
        class,
        real_max,
        real_argmax,
        real_max_margin,
        circle_max,
        circle_min,
        skipped: scan.skipped(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{exceptional_hermite, Partition};
    use crate::roots::zero_set_default;

    fn example(parts: &[u32], n: u64) -> (ZeroSet<f64>, WeightSpec) {
        let lam = Partition::new(parts.to_vec()).unwrap();
        let zs = zero_set_default(&exceptional_hermite(&lam, n).unwrap()).unwrap();
        (zs, WeightSpec::exceptional_hermite(&lam).unwrap())
    }

    #[test]
    fn grids() {
        let s = ScanSpec::default();
        let g = s.real_grid();
        assert_eq!(g.len(), 401);
        assert_eq!(g[200], 0.0);
        assert_eq!(g[0], -0.2);
        assert_eq!(s.circle_grid().len(), 360);
        assert!(ScanSpec {
            radius: 0.0,
            ..s.clone()
        }
        .validate()
        .is_err());
        assert!(ScanSpec { real_samples: 2, ..s }.validate().is_err());
    }

    #[test]
    fn origin_is_exactly_one_and_symmetries_hold() {
        let (zs, w) = example(&[1, 1, 1, 1], 8);
        let scan = scan_f(&zs, &w, &ScanSpec::default()).unwrap();
        let real: Vec<&ScanSample> = scan.real().collect();
        assert_eq!(real[200].log_f, Some(0.0));
        // parity of the zero set: log f(-x) = log f(x)
        for k in 0..200 {
            let (a, b) = (real[k].log_f.unwrap(), real[400 - k].log_f.unwrap());
            assert!((a - b).abs() < 1e-10);
        }
        // conjugation: θ ↔ 2π - θ
        let circle: Vec<&ScanSample> = scan.circle().collect();
        for k in 1..180 {
            let (a, b) = (circle[k].log_f.unwrap(), circle[360 - k].log_f.unwrap());
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn first_example_classifies() {
        let (zs, w) = example(&[1, 1, 1, 1], 8);
        let s = classify_scan(&scan_f(&zs, &w, &ScanSpec::default()).unwrap());
        assert_eq!(s.class, ScanClass::RealMaxAndSaddle, "{s:?}");
    }

    #[test]
    fn classical_hermite_translation_is_a_saddle() {
        // log f(z) = Re(-n z²) since the zeros sum to 0
        use crate::polycore::{hermite, parse_rational, Family};
        let zs = zero_set_default::<f64>(&hermite(6)).unwrap();
        let zero = parse_rational("0").unwrap();
        let w = WeightSpec::classical(Family::Hermite, zero.clone(), zero).unwrap();
        let scan = scan_f(&zs, &w, &ScanSpec::default()).unwrap();
        for s in &scan.samples {
            let expect = (-(s.z * s.z) * 6.0).re;
            assert!((s.log_f.unwrap() - expect).abs() < 1e-12);
        }
        assert_eq!(classify_scan(&scan).class, ScanClass::RealMaxAndSaddle);
    }
}
