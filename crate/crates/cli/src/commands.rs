use crate::output::write_grid_csv;
use crate::{Command, Target};
use serde_json::{json, Value};
use std::fmt::Write;
use std::path::Path;
use xop::energy::{
    check_sufficient_conditions, critical_point_report, log_abs_t_sq, Configuration, IndexMargin, WeightSpec,
};
use xop::explorer::{classify_scan, multistart_maximize, reproduce_examples, scan_f, MultistartSpec, ScanClass};
use xop::polycore::{exceptional_hermite, fit_ode_constant, poly_to_strings, rational_to_string};
use xop::roots::{zero_set_default, ZeroSet};
use xop::stieltjes::{
    conjugate_identity_complex, conjugate_identity_real, real_index_mu_sum, relation_report, OdeCoefficients,
};
use xop::Real;

/// What a subcommand produced: the JSON report, a human-readable table, and
/// whether a classification came out inconclusive.
pub struct Outcome {
    pub report: Value,
    pub table: String,
    pub inconclusive: bool,
}

fn sci<R: Real>(v: &R) -> String {
    format!("{:.9e}", v.to_f64())
}

struct Loaded<R> {
    weight: WeightSpec,
    zeros: ZeroSet<R>,
}

fn load<R: Real>(t: &Target) -> anyhow::Result<Loaded<R>> {
    let poly = exceptional_hermite(&t.partition, t.n)?;
    let weight = WeightSpec::exceptional_hermite(&t.partition)?;
    let zeros = zero_set_default(&poly)?;
    Ok(Loaded { weight, zeros })
}

fn header(command: &str, t: &Target) -> Value {
    json!({ "command": command, "partition": t.partition.to_string(), "n": t.n })
}

fn attach(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

pub fn execute<R: Real>(cmd: &Command, csv: Option<&Path>) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Build(t) => build(t),
        Command::Roots(t) => roots::<R>(t),
        Command::StieltjesCheck { target, m } => stieltjes_check::<R>(target, m),
        Command::EnergyCheck { target, convention } => energy_check::<R>(target, (*convention).into()),
        Command::Conditions { target, grid } => conditions::<R>(target, *grid),
        Command::Scan { target, scan } => scan_cmd::<R>(target, &scan.spec(), csv),
        Command::ReproduceExamples { scan } => reproduce::<R>(&scan.spec()),
        Command::Maximize { target, starts, seed } => maximize(target, *starts, *seed),
    }
}

fn done(report: Value, table: String) -> anyhow::Result<Outcome> {
    Ok(Outcome {
        report,
        table,
        inconclusive: false,
    })
}

fn build(t: &Target) -> anyhow::Result<Outcome> {
    let y = exceptional_hermite(&t.partition, t.n)?;
    let w = WeightSpec::exceptional_hermite(&t.partition)?;
    let c = fit_ode_constant(&y, &w.eta)?;
    let coeffs = poly_to_strings(&y);
    let degree = y.degree().unwrap_or(0);
    let mut table = format!(
        "partition {}  n {}  degree {degree}\nODE constant {}\neta {}\ncoefficients, lowest degree first:\n",
        t.partition,
        t.n,
        rational_to_string(&c),
        poly_to_strings(&w.eta).join(" "),
    );
    for (k, a) in coeffs.iter().enumerate() {
        writeln!(table, "  x^{k:<3} {a}")?;
    }
    let report = attach(
        header("build", t),
        json!({
            "degree": degree,
            "coefficients": coeffs,
            "eta": poly_to_strings(&w.eta),
            "ode_constant": rational_to_string(&c),
        }),
    );
    done(report, table)
}

fn roots<R: Real>(t: &Target) -> anyhow::Result<Outcome> {
    let l = load::<R>(t)?;
    let zs = &l.zeros;
    let mut table = format!(
        "degree {}: {} real, {} complex\n",
        zs.degree,
        zs.n_real(),
        zs.n_complex()
    );
    for x in &zs.real {
        writeln!(table, "  real  {}", x.to_decimal_string())?;
    }
    for p in &zs.pairs {
        writeln!(
            table,
            "  pair  {} ± {} i",
            p.x.to_decimal_string(),
            p.mu.to_decimal_string()
        )?;
    }
    if let Some(r) = zs.max_residual() {
        writeln!(table, "max |p(z)| {}", sci(&r))?;
    }
    let report = attach(
        header("roots", t),
        json!({ "n_real": zs.n_real(), "n_complex": zs.n_complex(), "zeros": zs }),
    );
    done(report, table)
}

fn stieltjes_check<R: Real>(t: &Target, orders: &[u32]) -> anyhow::Result<Outcome> {
    let l = load::<R>(t)?;
    let ode = OdeCoefficients::exceptional_hermite(&t.partition, t.n)?;
    let top = orders.iter().copied().max().unwrap_or(1) as usize;
    let ev = ode.eval::<R>(top);
    let zeros = l.zeros.expanded();
    let mut table = String::new();
    let mut reports = Vec::new();
    for &m in orders {
        let rep = relation_report(&ev, &zeros, m)?;
        writeln!(
            table,
            "S_{m}: max |direct - predicted| = {}",
            sci(&rep.max_abs_residual)
        )?;
        writeln!(
            table,
            "  {:>3}  {:>17}  {:>17}  {:>16}  {:>16}",
            "j", "re z_j", "im z_j", "abs residual", "rel residual"
        )?;
        for row in &rep.rows {
            writeln!(
                table,
                "  {:>3}  {:>17}  {:>17}  {:>16}  {:>16}",
                row.index,
                sci(&row.zero.re),
                sci(&row.zero.im),
                sci(&row.abs_residual),
                sci(&row.rel_residual)
            )?;
        }
        reports.push(serde_json::to_value(&rep)?);
    }

    let zs = &l.zeros;
    let w = l.weight.eval::<R>();
    let mut real_identity = R::zero();
    let mut mu_sum = R::zero();
    for i in 0..zs.n_real() {
        real_identity = real_identity.max_of(conjugate_identity_real(zs, i)?);
        mu_sum = mu_sum.max_of(real_index_mu_sum(zs, i)?);
    }
    let mut complex_equality = R::zero();
    let mut complex_zero = R::zero();
    for i in zs.n_real()..zs.degree {
        let r = conjugate_identity_complex(zs, &w, i)?;
        complex_equality = complex_equality.max_of(r.equality);
        complex_zero = complex_zero.max_of(r.zero);
    }
    writeln!(
        table,
        "conjugate identities: real {}  mu-sum {}  complex equality {}  complex zero {}",
        sci(&real_identity),
        sci(&mu_sum),
        sci(&complex_equality),
        sci(&complex_zero)
    )?;
    let report = attach(
        header("stieltjes-check", t),
        json!({
            "relations": reports,
            "conjugate_identities": {
                "real_max": real_identity.to_decimal_string(),
                "mu_sum_max": mu_sum.to_decimal_string(),
                "complex_equality_max": complex_equality.to_decimal_string(),
                "complex_zero_max": complex_zero.to_decimal_string(),
            },
        }),
    );
    done(report, table)
}

fn energy_check<R: Real>(t: &Target, conv: xop::energy::Convention) -> anyhow::Result<Outcome> {
    let l = load::<R>(t)?;
    let c = Configuration::from_zero_set(&l.zeros);
    let rep = critical_point_report(&c, &l.weight, conv, None)?;
    let table = format!(
        "n {} real, m {} complex\nmax |gradient| {}\nHessian asymmetry {}\nmin eigenvalue {:.9e}\nclassification {}\ndiagonally dominant {}\nlog-concave weight {} (max (log w)'' {:.3e})\n",
        rep.n,
        rep.m,
        sci(&rep.gradient_residual),
        sci(&rep.asymmetry),
        rep.min_eigenvalue,
        rep.classification,
        rep.diag_dominant,
        rep.log_concavity.holds,
        rep.log_concavity.extreme,
    );
    done(attach(header("energy-check", t), json!({ "report": rep })), table)
}

fn margin_line(table: &mut String, name: &str, holds: bool, v: &[IndexMargin]) -> std::fmt::Result {
    let min = v.iter().map(|m| m.margin).fold(f64::INFINITY, f64::min);
    let np = v
        .iter()
        .filter_map(|m| m.margin_without_partner)
        .fold(f64::INFINITY, f64::min);
    write!(table, "  {name:<26} {:<5}  min margin {min:>11.4e}", holds)?;
    if v.iter().any(|m| m.margin_without_partner.is_some()) {
        write!(table, "  without partner {np:>11.4e}")?;
    }
    writeln!(table)
}

fn conditions<R: Real>(t: &Target, grid: usize) -> anyhow::Result<Outcome> {
    let l = load::<R>(t)?;
    let r = check_sufficient_conditions(&l.weight, &l.zeros, grid)?;
    let f = &r.flags;
    let mut table = format!("k = {}\n", r.k_alpha);
    margin_line(&mut table, "real curvature", f.real_curvature, &r.real_curvature)?;
    margin_line(
        &mut table,
        "complex curvature",
        f.complex_curvature,
        &r.complex_curvature,
    )?;
    writeln!(
        table,
        "  {:<26} {:<5}  min value  {:>11.4e} at x = {:.4}",
        "eta convexity", f.eta_convexity, r.eta_convexity.extreme, r.eta_convexity.at
    )?;
    margin_line(
        &mut table,
        "complex eta at z",
        f.complex_eta_at_zero,
        &r.complex_eta_at_zero,
    )?;
    margin_line(
        &mut table,
        "complex eta at Re z",
        f.complex_eta_at_real_part,
        &r.complex_eta_at_real_part,
    )?;
    margin_line(&mut table, "real eta", f.real_eta, &r.real_eta)?;
    margin_line(&mut table, "complex eta", f.complex_eta, &r.complex_eta)?;
    writeln!(table, "all hold: {}", f.all())?;
    done(attach(header("conditions", t), json!({ "conditions": r })), table)
}

fn scan_cmd<R: Real>(t: &Target, spec: &xop::explorer::ScanSpec, csv: Option<&Path>) -> anyhow::Result<Outcome> {
    let l = load::<R>(t)?;
    let scan = scan_f(&l.zeros, &l.weight, spec)?;
    let summary = classify_scan(&scan);
    let doubled = classify_scan(&scan_f(&l.zeros, &l.weight, &spec.doubled())?).class;
    if let Some(p) = csv {
        write_grid_csv(p, &scan)?;
    }
    let table = format!(
        "classification {} (doubled grid: {})\nmax real log f {:.6e} at z = {:.4}, slack {:.3e}\ncircle log f in [{:.6e}, {:.6e}]\nskipped samples {}\n",
        summary.class,
        doubled,
        summary.real_max,
        summary.real_argmax,
        summary.real_max_margin,
        summary.circle_min,
        summary.circle_max,
        summary.skipped,
    );
    let inconclusive = summary.class == ScanClass::Inconclusive;
    let report = attach(
        header("scan", t),
        json!({ "summary": summary, "doubled_class": doubled, "scan": scan }),
    );
    Ok(Outcome {
        report,
        table,
        inconclusive,
    })
}

fn reproduce<R: Real>(spec: &xop::explorer::ScanSpec) -> anyhow::Result<Outcome> {
    let reports = reproduce_examples::<R>(spec)?;
    let mut table = format!(
        "{:<10} {:<10} {:>3} {:>5} {:>7}  {:<20} {:<20} {:<24} {:>11} {:>10} {:>9}\n",
        "example", "partition", "deg", "real", "complex", "expected", "scan", "hessian", "min eig", "conditions", "ms"
    );
    for r in &reports {
        writeln!(
            table,
            "{:<10} {:<10} {:>3} {:>5} {:>7}  {:<20} {:<20} {:<24} {:>11.4e} {:>10} {:>9.1}",
            r.name,
            r.partition,
            r.degree,
            r.n_real,
            r.n_complex,
            r.expected_class.to_string(),
            r.scan.class.to_string(),
            r.hessian_class.to_string(),
            r.min_eigenvalue,
            if r.conditions.flags.all() { "hold" } else { "fail" },
            r.runtimes.total_ms,
        )?;
    }
    let mismatched: Vec<&str> = reports
        .iter()
        .filter(|r| !r.class_matches())
        .map(|r| r.name.as_str())
        .collect();
    if !mismatched.is_empty() {
        writeln!(
            table,
            "scan class differs from the expected one for: {}",
            mismatched.join(", ")
        )?;
    }
    let inconclusive = reports.iter().any(|r| r.scan.class == ScanClass::Inconclusive);
    let report = json!({ "command": "reproduce-examples", "scan_spec": spec, "examples": reports });
    Ok(Outcome {
        report,
        table,
        inconclusive,
    })
}

/// Runs in double precision; the zero configuration only fixes `μ` and the target.
fn maximize(t: &Target, starts: usize, seed: u64) -> anyhow::Result<Outcome> {
    let l = load::<f64>(t)?;
    let c = Configuration::from_zero_set(&l.zeros);
    let mut target = c.y.clone();
    target[..c.n].sort_by(f64::total_cmp);
    let spec = MultistartSpec::around(starts, seed, &c.y, &l.weight);
    let r = multistart_maximize(&l.weight, c.n, &c.mu, &spec)?;
    let at_zeros = log_abs_t_sq(&c, &l.weight.eval::<f64>())?;
    let distance = r
        .best
        .y
        .iter()
        .zip(&target)
        .fold(0.0f64, |a, (x, y)| a.max((x - y).abs()));
    let close = r.fraction_within(&target, 1e-5);
    let converged = r.outcomes.iter().filter(|o| o.converged).count();
    let table = format!(
        "{starts} starts (seed {seed}) in [{:.4}, {:.4}], {converged} converged\nbest log|T|^2 {:.12e}\nat the zeros  {:.12e}\nbest to zeros (max-norm) {distance:.3e}\nstarts within 1e-5 of the zeros {:.1}%\ndispersion {:.3e}\n",
        spec.lower,
        spec.upper,
        r.best.value,
        at_zeros,
        close * 100.0,
        r.dispersion,
    );
    let report = attach(
        header("maximize", t),
        json!({
            "optimizer_precision": 53,
            "n_real": c.n,
            "target": target,
            "value_at_zeros": at_zeros,
            "best_distance_to_zeros": distance,
            "fraction_within_1e-5": close,
            "result": r,
        }),
    );
    done(report, table)
}
