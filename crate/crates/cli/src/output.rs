use serde::Serialize;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use xop::explorer::Scan;

pub fn write_json(path: &Path, value: &serde_json::Value) -> anyhow::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct GridRow {
    #[serde(rename = "re(z)")]
    re: String,
    #[serde(rename = "im(z)")]
    im: String,
    log_f: String,
}

/// 17 significant digits, which round-trips an f64.
fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// One row per sample, real segment first; skipped samples have an empty `log_f`.
pub fn write_grid_csv(path: &Path, scan: &Scan) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for s in &scan.samples {
        w.serialize(GridRow {
            re: sci(s.z.re),
            im: sci(s.z.im),
            log_f: s.log_f.map(sci).unwrap_or_default(),
        })?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(sci(0.1), "1.0000000000000001e-1");
        assert_eq!(sci(0.1).parse::<f64>().unwrap(), 0.1);
        assert_eq!(sci(-2.0), "-2.0000000000000000e0");
    }
}
