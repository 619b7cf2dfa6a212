//! End-to-end tests of the `tropsolve` binary: golden outputs for the worked
//! example, parse/print round-trips, exit-code mapping, and determinism.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropsolve_cli::matfile::{parse_matrix, render_matrix};
use tropsolve_core::{Matrix, TropMatrix, TropScalar};

const EXAMPLE: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/fixtures/example.trop"
);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tropsolve"))
}

/// Runs the binary and returns (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let output = bin().args(args).output().expect("binary runs");
    (
        output.status.code().expect("no signal"),
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
    )
}

// ===========================================================================
// Golden outputs for the worked example
// ===========================================================================

#[test]
fn normal_form_matches_the_golden_outputs() {
    let (code, stdout, _) = run(&["normal-form", EXAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/normal_form.txt"));

    let (code, stdout, _) = run(&["--format", "json", "normal-form", EXAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/normal_form.json"));
}

#[test]
fn solve_component_matches_the_golden_outputs() {
    let (code, stdout, _) = run(&["solve", "component", EXAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/solve_component.txt"));

    let (code, stdout, _) = run(&["--format", "json", "solve", "component", EXAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/solve_component.json"));
}

#[test]
fn solve_composite_matches_the_golden_outputs() {
    let (code, stdout, _) = run(&["solve", "composite", EXAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/solve_composite.txt"));

    let (code, stdout, _) = run(&["--format", "json", "solve", "composite", EXAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/solve_composite.json"));
}

#[test]
fn eigen_reports_the_example_spectrum() {
    let (code, stdout, _) = run(&["eigen", EXAMPLE]);
    assert_eq!(code, 0);
    assert!(stdout.contains("spectral radius: 2\n"));
    assert!(stdout.contains("block eigenvalues: 1 2 -1\n"));
    assert!(stdout.contains("irreducible: false\n"));
    assert!(!stdout.contains("eigenvector generator"));
}

#[test]
fn check_evaluates_the_documented_member() {
    let (code, stdout, _) = run(&["check", "component", EXAMPLE, "0", "0", "-1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("objective: -1\n"));
    assert!(stdout.contains("member: true\n"));

    // Scaling a member keeps it in the set; an arbitrary vector falls out.
    let (code, stdout, _) = run(&["check", "component", EXAMPLE, "5", "5", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("member: true\n"));
    let (code, stdout, _) = run(&["check", "component", EXAMPLE, "0", "0", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("member: false\n"));
}

#[test]
fn verify_agrees_with_the_solver_on_the_example() {
    for kind in ["component", "composite"] {
        let (code, stdout, _) = run(&["verify", kind, EXAMPLE]);
        assert_eq!(code, 0, "verify {kind} exits cleanly");
        assert!(stdout.contains("grid agrees: true\n"));
        assert!(stdout.contains("enumeration agrees: true\n"));
        assert!(stdout.contains("verdict: agreement\n"));
    }
    let (_, stdout, _) = run(&["verify", "component", EXAMPLE]);
    assert!(stdout.contains("solver minimum: -1\n"));
    assert!(stdout.contains("grid minimum: -1\n"));
    let (_, stdout, _) = run(&["verify", "composite", EXAMPLE]);
    assert!(stdout.contains("solver minimum: 2\n"));
    assert!(stdout.contains("grid minimum: 2\n"));
    assert!(stdout.contains("enumeration: 4 total, 4 accepted\n"));
}

// ===========================================================================
// Parse/print round-trips
// ===========================================================================

fn random_matrix(rng: &mut ChaCha8Rng) -> TropMatrix {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=6);
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let entry = match rng.gen_range(0..10) {
            0..=3 => TropScalar::bottom(),
            4..=7 => TropScalar::from_int(rng.gen_range(-9..=9)),
            _ => TropScalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)),
        };
        data.push(entry);
    }
    Matrix::new(rows, cols, data)
}

#[test]
fn printed_matrices_reparse_identically() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0520_26_08);
    for _ in 0..100 {
        let m = random_matrix(&mut rng);
        let text = render_matrix(&m);
        let back = parse_matrix(&text).expect("rendered matrices parse");
        assert_eq!(back, m);
    }
}

// ===========================================================================
// Exit codes
// ===========================================================================

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(name);
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn malformed_inputs_exit_with_code_two() {
    let bad = write_temp("tropsolve-bad-token.trop", "2 2\n0 1\nnope 3\n");
    let (code, _, stderr) = run(&["eigen", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 3, column 1"));

    let (code, _, stderr) = run(&["eigen", "/definitely/missing.trop"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot read"));

    // A vector of the wrong dimension is an input problem, not a hypothesis.
    let (code, _, _) = run(&["check", "component", EXAMPLE, "0", "0"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = run(&["verify", "component", EXAMPLE, "--grid", "3:2:1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("LO"));
}

#[test]
fn violated_hypotheses_exit_with_code_three() {
    let zero_row = write_temp("tropsolve-zero-row.trop", "2 2\n-inf -inf\n0 1\n");
    let (code, _, stderr) = run(&["solve", "component", zero_row.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("row 1"));

    let rect = write_temp("tropsolve-rect.trop", "1 2\n0 1\n");
    let (code, _, stderr) = run(&["solve", "composite", rect.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("square"));
}

#[test]
fn verification_disagreement_exits_with_code_one() {
    // Half-integer composite level 1/2, but the integer grid only reaches 1.
    let fractional = write_temp("tropsolve-fractional.trop", "2 2\n-inf 1\n0 -inf\n");
    let (code, stdout, _) = run(&["verify", "composite", fractional.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("solver minimum: 1/2\n"));
    assert!(stdout.contains("grid minimum: 1\n"));
    assert!(stdout.contains("grid agrees: false\n"));
    assert!(stdout.contains("enumeration agrees: true\n"));
    assert!(stdout.contains("verdict: disagreement\n"));

    // A grid refined to quarter steps reaches the optimum again.
    let (code, stdout, _) = run(&[
        "verify",
        "composite",
        fractional.to_str().unwrap(),
        "--grid",
        "-2:2:1/4",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict: agreement\n"));
}

#[test]
fn candidate_caps_come_from_flag_then_environment() {
    let output = bin()
        .args(["verify", "component", EXAMPLE])
        .env("TROPSOLVE_MAX_CANDIDATES", "1")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("exceeds the cap of 1"));

    // The flag overrides the environment.
    let output = bin()
        .args(["verify", "component", EXAMPLE, "--max-candidates", "100"])
        .env("TROPSOLVE_MAX_CANDIDATES", "1")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));

    let output = bin()
        .args(["verify", "component", EXAMPLE])
        .env("TROPSOLVE_MAX_CANDIDATES", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
}

// ===========================================================================
// Determinism
// ===========================================================================

#[test]
fn identical_invocations_produce_identical_bytes() {
    for args in [
        vec!["--format", "json", "solve", "composite", EXAMPLE],
        vec!["--format", "json", "verify", "component", EXAMPLE],
        vec!["normal-form", EXAMPLE],
    ] {
        let (_, first, _) = run(&args);
        let (_, second, _) = run(&args);
        assert_eq!(first, second, "stable output for {args:?}");
        assert!(!first.is_empty());
    }
}
