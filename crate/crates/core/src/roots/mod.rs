//! Complex zeros of exact polynomials: Aberth–Ehrlich iteration with Newton
//! polish, classification into real zeros and conjugate pairs, and the
//! distance of exceptional zeros to the zeros of η.

mod aberth;
mod proximity;
mod zeroset;

pub use aberth::{cauchy_bound, find_roots, RootOptions, RootSet};
pub use proximity::{eta_proximity, proximity_trend, ProximityEntry, ProximityTrend, TrendRow};
pub use zeroset::{
    check_simplicity, classify_zeros, zero_set, zero_set_default, ConjugatePair, ZeroSet, DEFAULT_TAU_REAL,
};
