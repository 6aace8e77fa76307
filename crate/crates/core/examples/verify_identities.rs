//! Runs one verification suite and prints a summary.
//!
//! `cargo run --release --example verify_identities -- theorem2`

use legendre_chi::harness::{run_default, CaseStatus, HarnessConfig, Suite};

fn main() -> legendre_chi::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("lemmas").parse()?;
    let report = run_default(suite, &HarnessConfig::default());

    let worst = report
        .cases
        .iter()
        .filter(|c| c.status() == CaseStatus::Passed)
        .max_by(|a, b| a.abs_err.total_cmp(&b.abs_err));
    if let Some(c) = worst {
        println!("largest passing residual: {} {:?} abs_err {:.2e}", c.id, c.params, c.abs_err);
    }
    for c in report.cases.iter().filter(|c| c.status() != CaseStatus::Passed) {
        println!("{:?}: {} {:?} abs_err {:.2e} {:?}", c.status(), c.id, c.params, c.abs_err, c.error);
    }
    for e in &report.exhibits {
        println!("exhibit {}: {} vs {}", e.label, e.value, e.reference);
    }
    for note in &report.untested {
        println!("untested: {note}");
    }
    let s = report.summary;
    println!("{}: {} cases, {} passed, {} failed, {} unconverged", report.suite, s.total, s.passed, s.failed, s.unconverged);
    Ok(())
}
