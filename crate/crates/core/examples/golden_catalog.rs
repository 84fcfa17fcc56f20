// Re-derives every catalog entry: the worked nonabelian examples and all
// abelian groups of order at most 64.
//
// ```bash
// cargo run --release --example golden_catalog
// ```

use std::error::Error;
use std::time::Instant;

use covdim::bounds::verify_catalog;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let start = Instant::now();
    let report = verify_catalog();
    for o in report.outcomes.iter().filter(|o| !o.entry.spec.starts_with('C') || o.entry.spec.contains(':')) {
        let covdim = o.covdim.map(|i| i.to_string()).unwrap_or_default();
        println!("{:<6} {:<40} covdim {covdim:<8} ({} certificates)", if o.passed() { "ok" } else { "FAIL" }, o.entry.spec, o.certificates);
    }
    let abelian = report.outcomes.iter().filter(|o| o.entry.spec.starts_with('C') && !o.entry.spec.contains(':')).count();
    println!("plus {abelian} abelian groups");
    println!("{} entries in {:.1?}", report.outcomes.len(), start.elapsed());
    if !report.all_passed() {
        return Err(format!("{} catalog entries failed", report.failures().len()).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
