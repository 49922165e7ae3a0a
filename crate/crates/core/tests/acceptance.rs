//! One test per acceptance criterion, so the harness prints a pass/fail line
//! for each. Run with `--nocapture` to see the supporting notes.

use kordered::suite::{run_criterion, SuiteOptions, CRITERIA};

fn criterion(id: u8) {
    let c = CRITERIA.iter().find(|c| c.id == id).expect("known criterion");
    let r = run_criterion(c, &SuiteOptions::default());
    let tag = if r.passed() { "PASS" } else { "FAIL" };
    println!("{tag} criterion {:>2} {} ({} ms)", r.id, r.name, r.elapsed_ms);
    for n in &r.notes {
        println!("      {n}");
    }
    for f in &r.failures {
        println!("      ! {f}");
    }
    assert!(r.passed(), "criterion {} {}: {:?} {:?}", r.id, r.name, r.outcome, r.failures);
}

#[test]
fn criterion_01_g24_five_ordered_hamiltonian() {
    criterion(1);
}

#[test]
fn criterion_02_g26_constructor_sweep() {
    criterion(2);
}

#[test]
fn criterion_03_counterexample_not_five_ordered() {
    criterion(3);
}

#[test]
fn criterion_04_parity() {
    criterion(4);
}

#[test]
fn criterion_05_diameter_bounds() {
    criterion(5);
}

#[test]
fn criterion_06_low_degree_families() {
    criterion(6);
}

#[test]
fn criterion_07_seven_part_degree_screen() {
    criterion(7);
}

#[test]
fn criterion_08_directed_grid() {
    criterion(8);
}

#[test]
fn criterion_09_linkage_repair() {
    criterion(9);
}

#[test]
fn criterion_10_greedy_constructions() {
    criterion(10);
}

#[test]
fn criterion_11_cross_oracle_soundness() {
    criterion(11);
}
