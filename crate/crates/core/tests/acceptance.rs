//! Acceptance suite: runs every verification check at its pinned
//! tolerance and prints one line per check plus a per-criterion summary.
//! `cargo test --test acceptance -- --nocapture` shows the full report;
//! the same registry backs the `casimir verify` subcommand.

use casimir_core::verify::run_all;

#[test]
fn acceptance_criteria() {
    let results = run_all(None, None);
    assert!(!results.is_empty());

    let mut by_criterion: std::collections::BTreeMap<u8, (usize, usize)> = Default::default();
    for r in &results {
        println!("{}", r.line());
        let entry = by_criterion.entry(r.criterion).or_insert((0, 0));
        entry.1 += 1;
        if r.pass {
            entry.0 += 1;
        }
    }

    println!("---");
    let mut all_pass = true;
    for (criterion, (passed, total)) in &by_criterion {
        let status = if passed == total { "PASS" } else { "FAIL" };
        println!("[{status}] criterion {criterion:2}: {passed}/{total} checks");
        all_pass &= passed == total;
    }

    let failures: Vec<_> = results.iter().filter(|r| !r.pass).collect();
    assert!(
        all_pass,
        "{} acceptance checks failed:\n{}",
        failures.len(),
        failures
            .iter()
            .map(|r| r.line())
            .collect::<Vec<_>>()
            .join("\n")
    );
}
