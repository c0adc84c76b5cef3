//! Acceptance gate: one test per verification check. Each test prints a
//! single PASS/FAIL line with the check's witness and asserts the pass.

use std::sync::OnceLock;

use crystals::verify::{Status, Suite};

fn suite() -> &'static Suite {
    static SUITE: OnceLock<Suite> = OnceLock::new();
    SUITE.get_or_init(|| Suite::new().expect("verification contexts must build"))
}

fn gate(id: &str) {
    let report = suite().run(id).expect("unknown check id");
    println!("[{}] {}: {} :: {}", report.status, report.id, report.subject, report.witness);
    assert_eq!(report.status, Status::Pass, "{}: {}", report.id, report.witness);
}

#[test]
fn criterion_01_element_and_root_counts() {
    gate("c01");
}

#[test]
fn criterion_02_perfectness_and_distinguished_elements() {
    gate("c02");
}

#[test]
fn criterion_03_energy_matches_zero_arrow_distance() {
    gate("c03");
}

#[test]
fn criterion_04_tensor_square_maximal_vectors() {
    gate("c04");
}

#[test]
fn criterion_05_ground_state_tables() {
    gate("c05");
}

#[test]
fn criterion_06_column_models_and_censuses() {
    gate("c06");
}

#[test]
fn criterion_07_automorphism_transport_tables() {
    gate("c07");
}

#[test]
fn criterion_08_wall_path_agreement() {
    gate("c08");
}

#[test]
fn criterion_09_fock_counts_and_convolution() {
    gate("c09");
}

#[test]
fn criterion_10_right_block_containment() {
    gate("c10");
}

#[test]
fn criterion_11_zero_drop_self_paths() {
    gate("c11");
}

#[test]
fn criterion_12_reduced_pinning_monotonicity() {
    gate("c12");
}
