//! Integration tests for the shipped binary: exit codes, report files, and
//! the file round-trips that let tower runs go through the filesystem.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use liealg::catalog::CatalogSpec;
use liealg::holomorph::completeness_theorem_certificate;
use liealg::io::Report;
use liealg::{Certificate, FieldSpec, Verdict};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_liealg")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn read_report(path: &Path) -> Report {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn catalog_then_verify_reproduces_the_in_memory_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let algebra = dir.path().join("sl2.json");
    let report_path = dir.path().join("report.json");

    let out = run(&["catalog", "sl", "--n", "2", "--out", algebra.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&[
        "verify",
        algebra.to_str().unwrap(),
        "--json",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let report = read_report(&report_path);
    assert_eq!(report.overall, Verdict::Pass);
    assert!(report.input_digest.starts_with("sha256:"));
    assert!(report.command.starts_with("verify"));

    // The report body must be byte-for-byte the library certificate.
    let g = CatalogSpec::Sl { n: 2 }.build(FieldSpec::Rational).unwrap();
    let cert = completeness_theorem_certificate(&g).unwrap();
    assert_eq!(report.results, serde_json::to_value(&cert).unwrap());

    let parsed: Certificate = serde_json::from_value(report.results).unwrap();
    assert_eq!(parsed, cert);
}

#[test]
fn emitted_derivation_algebra_revalidates_with_recorded_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let h3 = fixture("heisenberg.json");
    let der_file = dir.path().join("der_h3.json");
    let report_path = dir.path().join("der_report.json");

    let out = run(&[
        "der",
        h3.to_str().unwrap(),
        "--emit-algebra",
        der_file.to_str().unwrap(),
        "--json",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = read_report(&report_path);
    let der_dim = report.results["der_dim"].as_u64().unwrap();
    assert_eq!(der_dim, 6);

    // Re-ingest: the emitted file validates and has the recorded dimension.
    let vreport = dir.path().join("validate_report.json");
    let out = run(&[
        "validate",
        der_file.to_str().unwrap(),
        "--json",
        vreport.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let vrep = read_report(&vreport);
    assert_eq!(vrep.results["dim"].as_u64().unwrap(), der_dim);
    assert_eq!(vrep.results["valid"], serde_json::json!(true));
}

#[test]
fn tower_runs_through_files_match_the_library_tower() {
    // Drive the tower one level by hand through the filesystem: Der(sl2)
    // emitted to a file is again a 3-dimensional complete algebra.
    let dir = tempfile::tempdir().unwrap();
    let sl2 = fixture("sl2.json");
    let der_file = dir.path().join("der_sl2.json");

    let out = run(&["der", sl2.to_str().unwrap(), "--emit-algebra", der_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["complete", der_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let report_path = dir.path().join("tower.json");
    let out = run(&[
        "tower",
        sl2.to_str().unwrap(),
        "--max",
        "4",
        "--json",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = read_report(&report_path);
    assert_eq!(report.results["dims"], serde_json::json!([3]));
    assert_eq!(report.results["status"], serde_json::json!("complete"));
}

#[test]
fn holomorph_emission_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let h_file = dir.path().join("holomorph.json");
    let out = run(&[
        "holomorph",
        fixture("current_sl2_2.json").to_str().unwrap(),
        "--emit-algebra",
        h_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("dimension 13"), "stdout: {stdout}");

    let out = run(&["validate", h_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // The emitted holomorph is not complete; the binary reports that as a
    // verdict failure, not an input error.
    let out = run(&["complete", h_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn torus_subcommands_report_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("rad.json");
    let out = run(&[
        "torus",
        "rad",
        "--n",
        "2",
        "--order",
        "5",
        "--e",
        "0,1,-1,0",
        "--json",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = read_report(&report_path);
    assert_eq!(report.results["radical"], serde_json::json!([["5", "0"], ["0", "5"]]));

    let out = run(&["torus", "graded", "--n", "2", "--order", "2", "--e", "0,1,-1,0", "--box", "1"]);
    assert_eq!(out.status.code(), Some(0));

    // Wrong entry count is a usage-style input error.
    let out = run(&["torus", "rad", "--n", "2", "--order", "5", "--e", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn form_uses_file_form_and_falls_back_to_killing() {
    let out = run(&["form", fixture("sl2_plus_line.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("form source: file"), "stdout: {stdout}");

    let out = run(&["form", fixture("sl2.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("form source: killing"), "stdout: {stdout}");

    // Killing form of the Heisenberg algebra is identically zero, hence
    // degenerate: the nondegeneracy gate fails and the certificate is
    // cleanly not-applicable.
    let out = run(&["form", fixture("heisenberg.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("not applicable"), "stdout: {stdout}");
}

#[test]
fn catalog_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("x.json");
    let out_str = out_file.to_str().unwrap();

    // p dividing n degenerates the trace pairing bookkeeping; refused.
    let out = run(&["catalog", "sl", "--n", "2", "--prime", "2", "--out", out_str]);
    assert_eq!(out.status.code(), Some(2));
    // Composite modulus.
    let out = run(&["catalog", "sl", "--n", "2", "--prime", "6", "--out", out_str]);
    assert_eq!(out.status.code(), Some(2));
    // Flag mismatch.
    let out = run(&["catalog", "heisenberg", "--n", "3", "--out", out_str]);
    assert_eq!(out.status.code(), Some(2));
    // Compact expressions still work.
    let out = run(&["catalog", "sl:2+abelian:2", "--out", out_str]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["validate", out_str]);
    assert_eq!(out.status.code(), Some(0));
}
