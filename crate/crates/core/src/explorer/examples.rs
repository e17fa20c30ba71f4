use super::scan::{classify_scan, scan_f, ScanClass, ScanSpec, ScanSummary};
use crate::energy::{
    check_sufficient_conditions, critical_point_report, Configuration, Convention, HessianClass, SufficientConditions,
    WeightSpec, DEFAULT_GRID_POINTS,
};
use crate::error::Result;
use crate::polycore::{exceptional_hermite, fit_ode_constant, rational_to_string, Partition};
use crate::roots::{zero_set_default, ZeroSet};
use crate::scalar::Real;
use serde::Serialize;
use std::time::Instant;

/// One of the three worked configurations and its stated outcome.
#[derive(Clone, Copy, Debug)]
pub struct ExampleDef {
    pub name: &'static str,
    pub partition: &'static [u32],
    pub n: u64,
    pub expected_real: usize,
    pub expected_complex: usize,
    pub expected_class: ScanClass,
}

pub const EXAMPLES: [ExampleDef; 3] = [
    ExampleDef {
        name: "example-1",
        partition: &[1, 1, 1, 1],
        n: 8,
        expected_real: 4,
        expected_complex: 4,
        expected_class: ScanClass::RealMaxAndSaddle,
    },
    ExampleDef {
        name: "example-2",
        partition: &[1, 1, 3, 3],
        n: 8,
        expected_real: 2,
        expected_complex: 6,
        expected_class: ScanClass::RealMaxAndSaddle,
    },
    ExampleDef {
        name: "example-3",
        partition: &[2, 2, 3, 3],
        n: 10,
        expected_real: 2,
        expected_complex: 8,
        expected_class: ScanClass::Neither,
    },
];

/// Wall-clock milliseconds per pipeline stage.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Runtimes {
    pub construct_ms: f64,
    pub roots_ms: f64,
    pub energy_ms: f64,
    pub conditions_ms: f64,
    pub scan_ms: f64,
    pub total_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub name: String,
    pub partition: String,
    pub degree: usize,
    pub ode_constant: String,
    pub n_real: usize,
    pub n_complex: usize,
    pub expected_class: ScanClass,
    pub scan: ScanSummary,
    /// Classification with the grid density doubled.
    pub scan_class_doubled: ScanClass,
    pub stationarity_residual: f64,
    pub hessian_class: HessianClass,
    pub min_eigenvalue: f64,
    pub diag_dominant: bool,
    pub conditions: SufficientConditions,
    pub runtimes: Runtimes,
}

impl ExampleReport {
    pub fn counts_match(&self, def: &ExampleDef) -> bool {
        self.n_real == def.expected_real && self.n_complex == def.expected_complex
    }

    pub fn class_matches(&self) -> bool {
        self.scan.class == self.expected_class
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Zero set and weight of an example at precision `R`.
pub fn example_zeros<R: Real>(def: &ExampleDef) -> Result<(ZeroSet<R>, WeightSpec)> {
    let lam = Partition::new(def.partition.to_vec())?;
    let y = exceptional_hermite(&lam, def.n)?;
    Ok((zero_set_default(&y)?, WeightSpec::exceptional_hermite(&lam)?))
}

/// Construct, find and classify zeros, check stationarity and the Hessian,
/// evaluate the sufficient conditions and run the translation scan.
pub fn run_example<R: Real>(def: &ExampleDef, spec: &ScanSpec) -> Result<ExampleReport> {
    let total = Instant::now();
    let mut rt = Runtimes::default();

    let t = Instant::now();
    let lam = Partition::new(def.partition.to_vec())?;
    let y = exceptional_hermite(&lam, def.n)?;
    let w = WeightSpec::exceptional_hermite(&lam)?;
    let constant = fit_ode_constant(&y, &w.eta)?;
    rt.construct_ms = ms(t);

    let t = Instant::now();
    let zs: ZeroSet<R> = zero_set_default(&y)?;
    rt.roots_ms = ms(t);

    let t = Instant::now();
    let cp = critical_point_report(&Configuration::from_zero_set(&zs), &w, Convention::AbsSquared, None)?;
    rt.energy_ms = ms(t);

    let t = Instant::now();
    let conditions = check_sufficient_conditions(&w, &zs, DEFAULT_GRID_POINTS)?;
    rt.conditions_ms = ms(t);

    let t = Instant::now();
    let scan = classify_scan(&scan_f(&zs, &w, spec)?);
    let scan_class_doubled = classify_scan(&scan_f(&zs, &w, &spec.doubled())?).class;
    rt.scan_ms = ms(t);
    rt.total_ms = ms(total);

    Ok(ExampleReport {
        name: def.name.to_string(),
        partition: lam.to_string(),
        degree: zs.degree,
        ode_constant: rational_to_string(&constant),
        n_real: zs.n_real(),
        n_complex: zs.n_complex(),
        expected_class: def.expected_class,
        scan,
        scan_class_doubled,
        stationarity_residual: cp.gradient_residual.to_f64(),
        hessian_class: cp.classification,
        min_eigenvalue: cp.min_eigenvalue,
        diag_dominant: cp.diag_dominant,
        conditions,
        runtimes: rt,
    })
}

pub fn reproduce_examples<R: Real>(spec: &ScanSpec) -> Result<Vec<ExampleReport>> {
    EXAMPLES.iter().map(|d| run_example::<R>(d, spec)).collect()
}
