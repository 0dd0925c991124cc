//! Acceptance battery: runs every verification criterion and prints one
//! pass/fail line per criterion.

use leibalg::lattice::Budget;
use leibalg::suite;

#[test]
fn acceptance_battery() {
    let results = suite::run_all(&Budget::default());
    print!("{}", suite::render(&results));
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).collect();
    assert!(failed.is_empty(), "{} criteria failed", failed.len());
}
