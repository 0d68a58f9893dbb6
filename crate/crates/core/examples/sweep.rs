// All admissible parameter sets up to an ambient size, on a chosen number of threads.

use twoweight::report::{run_sweep, SweepConfig};

pub fn main() -> twoweight::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(256);
    let config = SweepConfig {
        max_ambient_size: max,
        ..SweepConfig::default()
    };
    let report = run_sweep(&config)?;
    print!("{}", report.summary_table());
    println!("{} cases, all pass: {}", report.cases.len(), report.passed);
    Ok(())
}
