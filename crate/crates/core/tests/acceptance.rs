//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Duration;

use orientkit_core::characterize::forbidden_catalog;
use orientkit_core::selftest::{self, CheckReport};
use orientkit_core::DecideOptions;

fn main() -> ExitCode {
    let catalog = forbidden_catalog();
    let criteria: Vec<(u8, Box<dyn Fn() -> CheckReport>)> = vec![
        (1, Box::new(|| selftest::recognizer_agreement(5..=5, 10_000, 2024, Some(Duration::from_secs(60))))),
        (2, Box::new(|| selftest::theorem_sweep(2, 5, &DecideOptions::default(), Some(Duration::from_secs(600))))),
        (3, Box::new(|| selftest::raft_construction(50, 10, Some(Duration::from_secs(10))))),
        (4, Box::new(|| selftest::co_chain_equivalence(7))),
        (5, Box::new(|| selftest::classification(12))),
        (6, Box::new(selftest::figure_reproductions)),
        (7, Box::new(|| selftest::closure_suite(6, 4))),
        (8, Box::new(|| selftest::known_classes(8, 40, &catalog))),
    ];
    let mut failed = 0;
    for (id, run) in &criteria {
        let report = run();
        if !report.passed {
            failed += 1;
        }
        println!("criterion {id}: {}", report.line());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
