use std::path::Path;
use std::process::{Command, Output};

fn xop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_json(p: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn build_writes_exact_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("build.json");
    let o = xop(&[
        "build",
        "--partition",
        "1,1,3,3",
        "--n",
        "8",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = read_json(&out);
    assert_eq!(v["degree"], 8);
    assert_eq!(v["partition"], "(1,1,3,3)");
    let c = v["coefficients"].as_array().unwrap();
    assert_eq!(c.len(), 9);
    assert!(c.iter().all(|s| s.as_str().unwrap().contains('/')));
    assert_eq!(v["precision"], 53);
}

#[test]
fn roots_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("roots.json");
    let o = xop(&[
        "roots",
        "--partition",
        "1,1,3,3",
        "--n",
        "8",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v = read_json(&out);
    assert_eq!(v["n_real"], 2);
    assert_eq!(v["n_complex"], 6);
    assert_eq!(v["zeros"]["pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn high_precision_zeros_carry_more_digits() {
    let o = xop(&[
        "--precision",
        "256",
        "--out",
        "-",
        "roots",
        "--partition",
        "1,1",
        "--n",
        "4",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["precision"], 256);
    let x = v["zeros"]["real"][1].as_str().unwrap();
    assert!(x.len() > 60, "{x}");
}

#[test]
fn stieltjes_table_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let o = xop(&[
        "stieltjes-check",
        "--partition",
        "1,1",
        "--n",
        "6",
        "--m",
        "1,2,3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stdout).contains("S_3"));
    let v = read_json(&out);
    let rel = v["relations"].as_array().unwrap();
    assert_eq!(rel.len(), 3);
    for r in rel {
        let worst: f64 = r["max_abs_residual"].as_str().unwrap().parse().unwrap();
        assert!(worst < 1e-10, "{worst}");
    }
}

#[test]
fn scan_csv_grid() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("grid.csv");
    let o = xop(&[
        "scan",
        "--partition",
        "1,1,1,1",
        "--n",
        "8",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let mut rdr = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(rdr.headers().unwrap(), vec!["re(z)", "im(z)", "log_f"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 401 + 360);
    let origin = &rows[200];
    assert_eq!(origin[0].parse::<f64>().unwrap(), 0.0);
    assert_eq!(origin[2].parse::<f64>().unwrap(), 0.0);
    // 17 significant digits: one before the point, sixteen after
    let mantissa = rows[0][2].split('e').next().unwrap().trim_start_matches('-');
    assert_eq!(mantissa.len(), 18, "{}", &rows[0][2]);
}

#[test]
fn inconclusive_scan_exits_two() {
    let o = xop(&["scan", "--partition", "1,1,1,1", "--n", "8", "--eps", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stdout).contains("inconclusive"));
}

#[test]
fn errors_exit_one() {
    assert_eq!(xop(&["build", "--partition", "1,2", "--n", "8"]).status.code(), Some(1));
    assert_eq!(xop(&["build", "--partition", "x", "--n", "8"]).status.code(), Some(1));
    assert_eq!(
        xop(&["--precision", "64", "build", "--partition", "1,1", "--n", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        xop(&["roots", "--partition", "1,1", "--n", "4", "--csv", "g.csv"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(xop(&["nonsense"]).status.code(), Some(1));
    assert_eq!(xop(&["--help"]).status.code(), Some(0));
}

#[test]
fn maximize_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = xop(&[
            "maximize",
            "--partition",
            "",
            "--n",
            "3",
            "--starts",
            "8",
            "--seed",
            "5",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let (va, vb) = (read_json(&a), read_json(&b));
    assert_eq!(va["result"]["best"]["y"], vb["result"]["best"]["y"]);
    assert!(va["best_distance_to_zeros"].as_f64().unwrap() < 1e-6);
}

#[test]
fn reproduce_examples_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ex.json");
    let o = xop(&["reproduce-examples", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v = read_json(&out);
    let ex = v["examples"].as_array().unwrap();
    assert_eq!(ex.len(), 3);
    for e in ex {
        let total = e["n_real"].as_u64().unwrap() + e["n_complex"].as_u64().unwrap();
        assert_eq!(total, e["degree"].as_u64().unwrap());
    }
    assert_eq!(ex[0]["scan"]["class"], "real-max-and-saddle");
}
