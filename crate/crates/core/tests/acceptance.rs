//! Acceptance gate: runs every calibrated criterion and prints one
//! pass/fail line per criterion before asserting they all hold.

use rrknot_core::verify::run_all;

#[test]
fn acceptance_criteria() {
    let reports = run_all();
    assert_eq!(reports.len(), 9);
    let mut failed = 0;
    for r in &reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {} — {} ({})", r.index, verdict, r.name, r.detail);
        if !r.passed {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
