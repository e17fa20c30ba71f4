//! Translation scans, multistart maximization and the three worked examples.

mod examples;
mod optimize;
mod scan;

pub use examples::{example_zeros, reproduce_examples, run_example, ExampleDef, ExampleReport, Runtimes, EXAMPLES};
pub use optimize::{multistart_maximize, MultistartResult, MultistartSpec, StartOutcome};
pub use scan::{classify_scan, scan_f, SampleKind, Scan, ScanClass, ScanSample, ScanSpec, ScanSummary};
