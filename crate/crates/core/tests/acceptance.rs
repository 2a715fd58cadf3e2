//! Runs the acceptance suite and prints one line per criterion.

use semicomp::acceptance;
use std::io::Write;

#[test]
fn acceptance_suite() {
    let report = acceptance::run(1);
    // Written to the raw handle so the lines show without --nocapture.
    let mut err = std::io::stderr().lock();
    writeln!(err).unwrap();
    for c in &report.criteria {
        writeln!(
            err,
            "criterion {} ({}): {}",
            c.id,
            c.title,
            if c.passed { "PASS" } else { "FAIL" }
        )
        .unwrap();
    }
    let failed: Vec<String> = report
        .criteria
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("criterion {}:\n    {}", c.id, c.details.join("\n    ")))
        .collect();
    assert!(failed.is_empty(), "{}", failed.join("\n"));
}
