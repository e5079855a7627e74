//! Acceptance criteria 1-9: one line per criterion, each under 60 s.

use std::time::{Duration, Instant};

use superalt::suites::{run_suite, SuiteOptions, SUITES};

const BUDGET: Duration = Duration::from_secs(60);

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for (name, criterion, title) in SUITES {
        let start = Instant::now();
        let report = run_suite(name, &SuiteOptions::default()).expect("registered suite");
        let took = start.elapsed();
        let ok = report.pass && took < BUDGET;
        println!(
            "criterion {criterion} [{name}] {}: {title} ({} checks, {:.2} s)",
            if ok { "PASS" } else { "FAIL" },
            report.checks.len(),
            took.as_secs_f64()
        );
        for c in report.failures() {
            println!("    failed: {} {}", c.name, c.detail.as_deref().unwrap_or(""));
        }
        if !ok {
            failed.push(criterion);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn a_corrupted_entry_fails_the_catalog_criterion() {
    let opts = SuiteOptions { corrupt: Some("v33".into()) };
    let r = run_suite("catalog", &opts).unwrap();
    assert!(!r.pass);
    assert!(r.failures().all(|c| c.name.starts_with("v33[")));
}

#[test]
fn unknown_suites_are_errors() {
    assert!(run_suite("nosuch", &SuiteOptions::default()).is_err());
}
