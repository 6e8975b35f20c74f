// Every example doubles as a smoke test.

#[allow(dead_code)]
mod audit_claims {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/audit_claims.rs"));
}
#[test]
fn audit_claims_runs() {
    audit_claims::run_example().expect("audit_claims");
}

#[allow(dead_code)]
mod baire_sumsets {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/baire_sumsets.rs"));
}
#[test]
fn baire_sumsets_runs() {
    baire_sumsets::run_example().expect("baire_sumsets");
}

#[allow(dead_code)]
mod certificates {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/certificates.rs"));
}
#[test]
fn certificates_runs() {
    certificates::run_example().expect("certificates");
}

#[allow(dead_code)]
mod cli_driver {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_driver.rs"));
}
#[test]
fn cli_driver_runs() {
    cli_driver::run_example().expect("cli_driver");
}

#[allow(dead_code)]
mod colorings {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/colorings.rs"));
}
#[test]
fn colorings_runs() {
    colorings::run_example().expect("colorings");
}

#[allow(dead_code)]
mod delta_systems {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/delta_systems.rs"));
}
#[test]
fn delta_systems_runs() {
    delta_systems::run_example().expect("delta_systems");
}

#[allow(dead_code)]
mod exact_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_arithmetic.rs"));
}
#[test]
fn exact_arithmetic_runs() {
    exact_arithmetic::run_example().expect("exact_arithmetic");
}

#[allow(dead_code)]
mod fin_fin_pipeline {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fin_fin_pipeline.rs"));
}
#[test]
fn fin_fin_pipeline_runs() {
    fin_fin_pipeline::run_example().expect("fin_fin_pipeline");
}

#[allow(dead_code)]
mod finite_sums {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/finite_sums.rs"));
}
#[test]
fn finite_sums_runs() {
    finite_sums::run_example().expect("finite_sums");
}

#[allow(dead_code)]
mod fs_witness {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fs_witness.rs"));
}
#[test]
fn fs_witness_runs() {
    fs_witness::run_example().expect("fs_witness");
}

#[allow(dead_code)]
mod greedy_basis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/greedy_basis.rs"));
}
#[test]
fn greedy_basis_runs() {
    greedy_basis::run_example().expect("greedy_basis");
}

#[allow(dead_code)]
mod minimal_numbers {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/minimal_numbers.rs"));
}
#[test]
fn minimal_numbers_runs() {
    minimal_numbers::run_example().expect("minimal_numbers");
}

#[allow(dead_code)]
mod owings_patterns {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/owings_patterns.rs"));
}
#[test]
fn owings_patterns_runs() {
    owings_patterns::run_example().expect("owings_patterns");
}

#[allow(dead_code)]
mod pair_ramsey {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pair_ramsey.rs"));
}
#[test]
fn pair_ramsey_runs() {
    pair_ramsey::run_example().expect("pair_ramsey");
}

#[allow(dead_code)]
mod ramsey_pullback {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ramsey_pullback.rs"));
}
#[test]
fn ramsey_pullback_runs() {
    ramsey_pullback::run_example().expect("ramsey_pullback");
}

#[allow(dead_code)]
mod semigroups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/semigroups.rs"));
}
#[test]
fn semigroups_runs() {
    semigroups::run_example().expect("semigroups");
}

#[allow(dead_code)]
mod support_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/support_arithmetic.rs"));
}
#[test]
fn support_arithmetic_runs() {
    support_arithmetic::run_example().expect("support_arithmetic");
}
