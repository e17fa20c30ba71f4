//! `xop`: build exceptional Hermite polynomials, locate their zeros and probe
//! the energy of the zero configuration.

mod commands;
mod output;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use xop::energy::{Convention, DEFAULT_GRID_POINTS};
use xop::explorer::ScanSpec;
use xop::polycore::Partition;
use xop::{Precision, F256};

#[derive(Parser, Debug)]
#[command(
    name = "xop",
    version,
    about = "Exceptional Hermite zeros and their energy landscape"
)]
struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, default_value = "53", value_parser = parse_precision)]
    precision: Precision,

    /// Write the full JSON report here (`-` for stdout).
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Write the scan grid as CSV (`scan` only).
    #[arg(long, global = true, value_name = "FILE")]
    csv: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    s.parse::<u32>()
        .ok()
        .and_then(Precision::from_bits)
        .ok_or_else(|| format!("unsupported precision {s:?}; use 53 or 256"))
}

/// The polynomial `H^{(λ)}_n` under study.
#[derive(Args, Debug, Clone)]
struct Target {
    /// Double partition, e.g. `1,1,3,3`; empty for classical Hermite.
    #[arg(long)]
    partition: Partition,
    /// Index `n` of the polynomial.
    #[arg(long)]
    n: u64,
}

#[derive(Args, Debug, Clone)]
struct ScanArgs {
    /// Half-width of the real window around z = 0.
    #[arg(long, default_value_t = 0.2)]
    window: f64,
    /// Radius of the sampled circle.
    #[arg(long, default_value_t = 0.05)]
    radius: f64,
    #[arg(long, default_value_t = 401)]
    real_samples: usize,
    #[arg(long, default_value_t = 360)]
    circle_samples: usize,
    /// Classification margin on log f.
    #[arg(long, default_value_t = 1e-8)]
    eps: f64,
}

impl ScanArgs {
    fn spec(&self) -> ScanSpec {
        ScanSpec {
            half_width: self.window,
            real_samples: self.real_samples,
            radius: self.radius,
            circle_samples: self.circle_samples,
            epsilon: self.eps,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ConventionArg {
    /// `log|T|²`, every pair counted with both members.
    AbsSquared,
    /// Half of the above, the classical normalization.
    Classical,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::AbsSquared => Convention::AbsSquared,
            ConventionArg::Classical => Convention::Classical,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct the polynomial, η and the ODE constant exactly.
    Build(Target),
    /// Zeros split into real zeros and conjugate pairs.
    Roots(Target),
    /// Direct Stieltjes sums against their ODE predictions.
    StieltjesCheck {
        #[command(flatten)]
        target: Target,
        /// Orders to check.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        m: Vec<u32>,
    },
    /// Gradient, Hessian and definiteness at the zero configuration.
    EnergyCheck {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "abs-squared")]
        convention: ConventionArg,
    },
    /// Per-index margins of the sufficient conditions.
    Conditions {
        #[command(flatten)]
        target: Target,
        /// Grid size for the pointwise checks.
        #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
        grid: usize,
    },
    /// Sample log f(z) around z = 0 and classify the critical point.
    Scan {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Full pipeline for the three worked examples.
    ReproduceExamples {
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Multistart ascent of log|T|² with imaginary parts held at the zeros' values.
    Maximize {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 50)]
        starts: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    if cli.csv.is_some() && !matches!(cli.command, Command::Scan { .. }) {
        bail!("--csv is only produced by the scan subcommand");
    }
    let outcome = match cli.precision {
        Precision::Double => commands::execute::<f64>(&cli.command, cli.csv.as_deref())?,
        Precision::Bits256 => commands::execute::<F256>(&cli.command, cli.csv.as_deref())?,
    };
    let mut report = outcome.report;
    report["precision"] = cli.precision.bits().into();
    match cli.out.as_deref() {
        Some(p) if p.as_os_str() == "-" => println!("{}", serde_json::to_string_pretty(&report)?),
        Some(p) => {
            print!("{}", outcome.table);
            output::write_json(p, &report).with_context(|| format!("writing {}", p.display()))?;
        }
        None => print!("{}", outcome.table),
    }
    Ok(if outcome.inconclusive {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
