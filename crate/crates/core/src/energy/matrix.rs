use crate::scalar::Real;
use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

/// Default relative eigenvalue tolerance for [`classify_hessian`].
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

/// Strict diagonal dominance with positive diagonal, and the row margins
/// `H_ii - Σ_{j≠i} |H_ij|`.
pub fn check_diag_dominance<R: Real>(h: &[Vec<R>]) -> (bool, Vec<R>) {
    let margins: Vec<R> = h
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let off = row
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(R::zero(), |a, (_, v)| a + v.abs());
            row[i].clone() - off
        })
        .collect();
    let ok = h.iter().enumerate().all(|(i, row)| row[i] > R::zero()) && margins.iter().all(|m| *m > R::zero());
    (ok, margins)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HessianClass {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    SemidefiniteDegenerate,
}

impl std::fmt::Display for HessianClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            HessianClass::PositiveDefinite => "positive-definite",
            HessianClass::NegativeDefinite => "negative-definite",
            HessianClass::Indefinite => "indefinite",
            HessianClass::SemidefiniteDegenerate => "semidefinite-degenerate",
        };
        f.write_str(s)
    }
}

/// Ascending eigenvalues of a symmetric matrix (computed in `f64`).
pub fn symmetric_eigenvalues<R: Real>(h: &[Vec<R>]) -> Vec<f64> {
    let n = h.len();
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| 0.5 * (h[i][j].to_f64() + h[j][i].to_f64()));
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    ev
}

/// Sign pattern of the spectrum, with eigenvalues within `tol · max|λ|` of
/// zero treated as zero.
pub fn classify_eigenvalues(ev: &[f64], tol: f64) -> HessianClass {
    let norm = ev.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if norm == 0.0 {
        return HessianClass::SemidefiniteDegenerate;
    }
    let cut = tol * norm;
    let pos = ev.iter().any(|v| *v > cut);
    let neg = ev.iter().any(|v| *v < -cut);
    let zero = ev.iter().any(|v| v.abs() <= cut);
    match (pos, neg, zero) {
        (true, true, _) => HessianClass::Indefinite,
        (true, false, false) => HessianClass::PositiveDefinite,
        (false, true, false) => HessianClass::NegativeDefinite,
        _ => HessianClass::SemidefiniteDegenerate,
    }
}

pub fn classify_hessian<R: Real>(h: &[Vec<R>], tol: f64) -> HessianClass {
    classify_eigenvalues(&symmetric_eigenvalues(h), tol)
}
