//! Acceptance criteria 1 to 10, one line per criterion.

use std::io::Write;

use quasi3::selftest::{run_all, SelftestConfig};

#[test]
fn acceptance() {
    let cfg = SelftestConfig { budget: quasi3::budget_from_env().expect("QUASI3_BUDGET"), ..SelftestConfig::default() };
    let results = run_all(&cfg);
    // Written to the raw handle so the lines show without --nocapture.
    let mut err = std::io::stderr().lock();
    writeln!(err).unwrap();
    for r in &results {
        writeln!(err, "{}", r.line()).unwrap();
    }
    drop(err);
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
    assert_eq!(results.len(), 10);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
