//! Acceptance gate for the library.
//!
//! Each numbered criterion is executed through the shared verification
//! report in `ptd_core::verify`. A criterion passes when none of its
//! checks come back failing; diagnostic entries are printed for
//! inspection but never affect the verdict. Criteria with a stated time
//! budget are additionally held to it, measured around the whole run.

use std::time::{Duration, Instant};

use ptd_core::verify::{run_criterion, Status};

/// Runs one criterion, prints a single PASS/FAIL line plus the
/// underlying checks, and asserts that nothing failed.
fn run(index: usize, title: &str, budget: Option<Duration>) {
    let started = Instant::now();
    let checks = run_criterion(index);
    let elapsed = started.elapsed();
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual))
        .collect();
    let over_budget = budget.is_some_and(|b| elapsed > b);
    let verdict = if failed.is_empty() && !over_budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!("criterion {index:02} {verdict} ({elapsed:.2?})  - {title}");
    for check in &checks {
        println!(
            "    [{}] {}: expected {}, got {}",
            check.status, check.name, check.expected, check.actual
        );
    }
    assert!(failed.is_empty(), "criterion {index:02}: {failed:?}");
    if let Some(b) = budget {
        assert!(
            elapsed <= b,
            "criterion {index:02} took {elapsed:?}, budget {b:?}"
        );
    }
}

#[test]
fn criterion_01_exhaustive_counts_for_small_ranks() {
    run(
        1,
        "exhaustive torsion counts for ranks 1 through 5",
        Some(Duration::from_secs(305)),
    );
}

#[test]
fn criterion_02_generating_function_counts() {
    run(
        2,
        "power series counts reproduce every exhaustive value",
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_03_forcing_matches_fixed_point() {
    run(
        3,
        "forcing conditions agree with the fixed-point test on every subset",
        Some(Duration::from_secs(120)),
    );
}

#[test]
fn criterion_04_noncrossing_complement_stability() {
    run(
        4,
        "noncrossing complements of closed sets are closed and involutive",
        None,
    );
}

#[test]
fn criterion_05_categorical_vs_arc_torsion() {
    run(
        5,
        "categorical torsion test matches the arc test",
        None,
    );
}

#[test]
fn criterion_06_hammock_vs_crossing_rule() {
    run(
        6,
        "hammock walk reproduces the shifted crossing rule",
        None,
    );
}

#[test]
fn criterion_07_polygon_sweep_vs_series() {
    run(
        7,
        "polygon diagram counts match the defining series equation",
        None,
    );
}

#[test]
fn criterion_08_word_counts_vs_series() {
    run(
        8,
        "circular word counts match their closed forms",
        None,
    );
}

#[test]
fn criterion_09_region_counts_vs_series() {
    run(
        9,
        "central region constructions match the three kind series",
        None,
    );
}

#[test]
fn criterion_10_decomposition_round_trip() {
    run(
        10,
        "decomposition round trips, kind partition, and complement stability",
        None,
    );
}

#[test]
fn criterion_11_series_identities() {
    run(
        11,
        "compact series identities and the two counting routes agree",
        None,
    );
}

#[test]
fn criterion_12_cubic_residual_diagnostics() {
    run(
        12,
        "cubic relation residuals recorded for both variants",
        None,
    );
}
