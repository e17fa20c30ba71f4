use super::conditions::{check_log_concavity, GridCheck, SufficientConditions, DEFAULT_GRID_POINTS};
use super::config::Configuration;
use super::derivatives::{gradient, hessian, Convention};
use super::matrix::{
    check_diag_dominance, classify_eigenvalues, symmetric_eigenvalues, HessianClass, DEFAULT_CLASSIFY_TOL,
};
use super::weight::WeightSpec;
use crate::error::Result;
use crate::scalar::{ser, Real};
use serde::Serialize;

/// Everything known about a configuration as a candidate maximizer.
#[derive(Clone, Debug, Serialize)]
#[serde(bound(serialize = "R: Real"))]
pub struct CriticalPointReport<R> {
    pub convention: Convention,
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "ser::reals")]
    pub gradient: Vec<R>,
    /// `max_i |∂_i|`.
    #[serde(serialize_with = "ser::real")]
    pub gradient_residual: R,
    /// Hessian of the negated objective, row-major.
    #[serde(serialize_with = "ser::matrix")]
    pub hessian: Vec<Vec<R>>,
    #[serde(serialize_with = "ser::real")]
    pub asymmetry: R,
    #[serde(serialize_with = "ser::reals")]
    pub eigenvalues: Vec<f64>,
    #[serde(serialize_with = "ser::real")]
    pub min_eigenvalue: f64,
    pub classification: HessianClass,
    pub diag_dominant: bool,
    #[serde(serialize_with = "ser::reals")]
    pub dominance_margins: Vec<R>,
    pub log_concavity: GridCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<SufficientConditions>,
}

impl<R: Real> CriticalPointReport<R> {
    /// A local maximum of the objective: the negated Hessian is positive definite.
    pub fn is_local_max(&self) -> bool {
        self.classification == HessianClass::PositiveDefinite
    }
}

pub fn critical_point_report<R: Real>(
    c: &Configuration<R>,
    w: &WeightSpec,
    conv: Convention,
    conditions: Option<SufficientConditions>,
) -> Result<CriticalPointReport<R>> {
    let ev = w.eval::<R>();
    let g = gradient(c, &ev, conv)?;
    let h = hessian(c, &ev, conv)?;
    let gradient_residual = g.iter().fold(R::zero(), |a, v| a.max_of(v.abs()));
    let mut asymmetry = R::zero();
    for i in 0..h.len() {
        for j in 0..i {
            asymmetry = asymmetry.max_of((h[i][j].clone() - h[j][i].clone()).abs());
        }
    }
    let eigenvalues = symmetric_eigenvalues(&h);
    let min_eigenvalue = eigenvalues.first().copied().unwrap_or(f64::NAN);
    let classification = classify_eigenvalues(&eigenvalues, DEFAULT_CLASSIFY_TOL);
    let (diag_dominant, dominance_margins) = check_diag_dominance(&h);
    let log_concavity = check_log_concavity(w, &w.domain().grid(DEFAULT_GRID_POINTS))?;
    Ok(CriticalPointReport {
        convention: conv,
        n: c.n,
        m: c.m,
        gradient: g,
        gradient_residual,
        hessian: h,
        asymmetry,
        eigenvalues,
        min_eigenvalue,
        classification,
        diag_dominant,
        dominance_margins,
        log_concavity,
        conditions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::check_sufficient_conditions;
    use crate::polycore::{classical_poly, exceptional_hermite, parse_rational, Family, Partition};
    use crate::roots::zero_set_default;

    #[test]
    fn classical_reduction() {
        let zero = parse_rational("0").unwrap();
        let w = WeightSpec::classical(Family::Hermite, zero.clone(), zero.clone()).unwrap();
        let zs = zero_set_default::<f64>(&classical_poly(Family::Hermite, 5, &zero, &zero).unwrap()).unwrap();
        let c = Configuration::from_zero_set(&zs);
        let full = critical_point_report(&c, &w, Convention::AbsSquared, None).unwrap();
        let half = critical_point_report(&c, &w, Convention::Classical, None).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert!((full.hessian[i][j] - 2.0 * half.hessian[i][j]).abs() < 1e-12);
            }
        }
        assert_eq!(full.classification, half.classification);
        assert_eq!(half.classification, HessianClass::PositiveDefinite);
        assert!(half.diag_dominant && half.gradient_residual < 1e-12);
    }

    #[test]
    fn example_report_serializes() {
        let lam = Partition::new(vec![1, 1, 1, 1]).unwrap();
        let w = WeightSpec::exceptional_hermite(&lam).unwrap();
        let zs = zero_set_default::<f64>(&exceptional_hermite(&lam, 8).unwrap()).unwrap();
        let cond = check_sufficient_conditions(&w, &zs, 401).unwrap();
        let r = critical_point_report(
            &Configuration::from_zero_set(&zs),
            &w,
            Convention::AbsSquared,
            Some(cond),
        )
        .unwrap();
        assert!(r.gradient_residual < 1e-7);
        assert!(r.asymmetry <= 1e-12);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["hessian"].as_array().unwrap().len(), 8);
        assert!(v["hessian"][0][0].is_string());
        assert_eq!(v["conditions"]["complex_curvature"][0]["margin"], "-inf");
    }
}
