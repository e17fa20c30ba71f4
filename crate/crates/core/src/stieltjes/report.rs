use super::sums::{direct_sum, OdeEval};
use crate::error::Result;
use crate::scalar::{ser, ComplexExt, Real};
use num_complex::Complex;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
#[serde(bound(serialize = "R: Real"))]
pub struct RelationRow<R> {
    /// 0-based position in the expanded zero list.
    pub index: usize,
    #[serde(serialize_with = "ser::complex")]
    pub zero: Complex<R>,
    #[serde(serialize_with = "ser::complex")]
    pub direct: Complex<R>,
    #[serde(serialize_with = "ser::complex")]
    pub predicted: Complex<R>,
    #[serde(serialize_with = "ser::real")]
    pub abs_residual: R,
    #[serde(serialize_with = "ser::real")]
    pub rel_residual: R,
}

/// Direct `S_{m,j}` against the ODE prediction at every zero.
#[derive(Clone, Debug, Serialize)]
#[serde(bound(serialize = "R: Real"))]
pub struct RelationReport<R> {
    pub m: u32,
    pub rows: Vec<RelationRow<R>>,
    #[serde(serialize_with = "ser::real")]
    pub max_abs_residual: R,
}

pub fn relation_report<R: Real>(ode: &OdeEval<R>, zeros: &[Complex<R>], m: u32) -> Result<RelationReport<R>> {
    let mut rows = Vec::with_capacity(zeros.len());
    let mut worst = R::zero();
    for (j, z) in zeros.iter().enumerate() {
        let direct = direct_sum(zeros, m, j)?;
        let predicted = ode.z_recurrence_predict(z, m as usize)?;
        let abs_residual = (direct.clone() - predicted.clone()).modulus();
        let scale = direct.modulus();
        let rel_residual = if scale.is_zero() {
            abs_residual.clone()
        } else {
            abs_residual.clone() / scale
        };
        worst = worst.max_of(abs_residual.clone());
        rows.push(RelationRow {
            index: j,
            zero: z.clone(),
            direct,
            predicted,
            abs_residual,
            rel_residual,
        });
    }
    Ok(RelationReport {
        m,
        rows,
        max_abs_residual: worst,
    })
}
