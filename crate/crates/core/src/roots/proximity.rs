use super::zeroset::{zero_set_default, ZeroSet};
use crate::error::Result;
use crate::polycore::{eta_hermite, exceptional_hermite, Partition};
use crate::scalar::{ComplexExt, Real};
use num_complex::Complex;

#[derive(Clone, Debug)]
pub struct ProximityEntry<R> {
    pub zero: Complex<R>,
    /// Distance to the nearest zero of η.
    pub distance: R,
}

/// For every non-real zero of `H^{(λ)}_n`, the distance to the closest zero of `η_λ`.
pub fn eta_proximity<R: Real>(lambda: &Partition, n: u64) -> Result<Vec<ProximityEntry<R>>> {
    let y = exceptional_hermite(lambda, n)?;
    let eta = eta_hermite(lambda)?;
    if eta.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let zy: ZeroSet<R> = zero_set_default(&y)?;
    let ze: ZeroSet<R> = zero_set_default(&eta)?;
    let eta_zeros = ze.expanded();
    Ok(zy
        .complex_zeros()
        .into_iter()
        .map(|z| {
            let distance = eta_zeros
                .iter()
                .map(|e| (z.clone() - e.clone()).modulus())
                .reduce(R::min_of)
                .expect("η has zeros");
            ProximityEntry { zero: z, distance }
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct TrendRow {
    pub n: u64,
    pub max_distance: f64,
    pub mean_distance: f64,
}

/// Proximity summary over several degrees. The trend is reported, not enforced.
#[derive(Clone, Debug)]
pub struct ProximityTrend {
    pub rows: Vec<TrendRow>,
    /// Whether the maximum distance strictly decreases along `rows`.
    pub decreasing: bool,
}

pub fn proximity_trend(lambda: &Partition, ns: &[u64]) -> Result<ProximityTrend> {
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let d: Vec<f64> = eta_proximity::<f64>(lambda, n)?.iter().map(|e| e.distance).collect();
        let max_distance = d.iter().cloned().fold(0.0, f64::max);
        let mean_distance = if d.is_empty() {
            0.0
        } else {
            d.iter().sum::<f64>() / d.len() as f64
        };
        rows.push(TrendRow {
            n,
            max_distance,
            mean_distance,
        });
    }
    let decreasing = rows.windows(2).all(|w| w[1].max_distance < w[0].max_distance);
    Ok(ProximityTrend { rows, decreasing })
}
