//! Runs the oracle sweep and writes `sweep.json` and `sweep.csv` to the
//! given directory (default: the system temp dir).

use polyhex::cli::cmd_sweep;

fn main() -> polyhex::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20);
    let dir = std::env::args().nth(2).map(Into::into).unwrap_or_else(std::env::temp_dir);
    let report = cmd_sweep(max, true)?;
    let base = dir.join("sweep");
    report.write(&base)?;
    println!("{} rows written to {}.{{json,csv}}", report.rows.len(), base.display());
    for row in report.disagreeing() {
        println!("DISAGREE {}: {}", row.spec, row.disagreements.join(", "));
    }
    Ok(())
}
