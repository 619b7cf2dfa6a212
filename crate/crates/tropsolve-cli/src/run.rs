//! Command dispatch: load inputs, call the library, build the report, and
//! map every failure onto the documented exit codes.
//!
//! | code | meaning                                                        |
//! |------|----------------------------------------------------------------|
//! | 0    | success                                                        |
//! | 1    | verification ran and disagreed with the solver                 |
//! | 2    | input problems: unreadable files, parse errors, bad grids,     |
//! |      | shape mismatches, oracle workloads beyond their caps           |
//! | 3    | a named solver hypothesis fails (zero row, −∞ leading          |
//! |      | eigenvalue, reducibility, level out of range, …)               |
//! | 4    | internal inconsistency (a result the hypotheses rule out)      |
//!
//! Reports go to stdout; timings and error messages go to stderr, so the
//! structured output stays byte-deterministic.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use tropsolve_core::linalg::star;
use tropsolve_core::optimizer::{
    check_membership, objective, solve_component_with, solve_composite_with,
};
use tropsolve_core::oracle::{
    exhaustive_candidates, grid_minimum, GridSpec, DEFAULT_CANDIDATE_CAP, DEFAULT_GRID_CAP,
};
use tropsolve_core::spectral::{eigenvectors, is_irreducible, normal_form, spectral_radius};
use tropsolve_core::{Error as CoreError, Semifield, TropMatrix, TropScalar};

use crate::args::{Cli, Command, Format, KindArg};
use crate::matfile::parse_matrix;
use crate::report::{
    matrix_rows, scalar_str, vector_entries, CandidateEntry, CheckReport, EigenReport,
    NormalFormReport, Report, SolveReport, VerifyReport,
};

/// Name of the environment variable holding the default candidate cap for
/// `verify`; the `--max-candidates` flag takes precedence.
pub const MAX_CANDIDATES_ENV: &str = "TROPSOLVE_MAX_CANDIDATES";

/// A finished command: the report, whether verification disagreed, and the
/// wall-clock time of the heavy phase (reported on stderr only).
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub disagreement: bool,
    pub elapsed: Option<Duration>,
}

/// A failed command: the exit code and the message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

/// Runs a parsed invocation end to end and returns the process exit code.
#[must_use]
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Text => outcome.report.to_text(),
                Format::Json => outcome.report.to_json(),
            };
            print!("{rendered}");
            if let Some(elapsed) = outcome.elapsed {
                eprintln!("elapsed: {elapsed:?}");
            }
            i32::from(outcome.disagreement)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

/// Executes one subcommand without touching stdout or the process state.
///
/// # Errors
///
/// Returns the exit code and message for any input, hypothesis, or internal
/// failure, per the table above.
pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Eigen { file } => cmd_eigen(file),
        Command::NormalForm { file } => cmd_normal_form(file),
        Command::Solve {
            kind,
            file,
            no_prune,
        } => cmd_solve(*kind, file, !no_prune),
        Command::Check { kind, file, vector } => cmd_check(*kind, file, vector),
        Command::Verify {
            kind,
            file,
            grid,
            max_candidates,
            no_prune,
        } => cmd_verify(*kind, file, grid, *max_candidates, !no_prune),
    }
}

// ---------------------------------------------------------------------------
// Failure plumbing
// ---------------------------------------------------------------------------

/// Exit code for a library error: 2 for malformed inputs, 3 for violated
/// solver hypotheses, 4 for results the hypotheses rule out.
fn exit_code(err: &CoreError) -> i32 {
    match err {
        CoreError::InvalidScalar { .. }
        | CoreError::ShapeMismatch { .. }
        | CoreError::CapExceeded { .. } => 2,
        CoreError::NotSquare { .. }
        | CoreError::ZeroRow { .. }
        | CoreError::ZeroColumn { .. }
        | CoreError::AllBottomMatrix { .. }
        | CoreError::ZeroVector { .. }
        | CoreError::IrregularVector { .. }
        | CoreError::ReducibleMatrix
        | CoreError::BottomLeadingEigenvalue
        | CoreError::BottomSpectralRadius
        | CoreError::LevelBelowUnit { .. } => 3,
        _ => 4,
    }
}

fn core(err: CoreError) -> Failure {
    Failure {
        code: exit_code(&err),
        message: err.to_string(),
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read_matrix(path: &Path) -> Result<TropMatrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn cmd_eigen(file: &Path) -> Result<Outcome, Failure> {
    let a = read_matrix(file)?;
    let spectrum = spectral_radius(&a).map_err(core)?;
    let irreducible = is_irreducible(&a).map_err(core)?;
    let eigenvector_generator = if irreducible {
        Some(matrix_rows(&eigenvectors(&a).map_err(core)?))
    } else {
        None
    };
    Ok(Outcome {
        report: Report::Eigen(EigenReport {
            command: "eigen".to_owned(),
            rows: a.rows(),
            cols: a.cols(),
            spectral_radius: scalar_str(&spectrum.rho),
            block_eigenvalues: spectrum.per_block.iter().map(scalar_str).collect(),
            irreducible,
            eigenvector_generator,
        }),
        disagreement: false,
        elapsed: None,
    })
}

fn cmd_normal_form(file: &Path) -> Result<Outcome, Failure> {
    let a = read_matrix(file)?;
    let nf = normal_form(&a).map_err(core)?;
    Ok(Outcome {
        report: Report::NormalForm(NormalFormReport {
            command: "normal-form".to_owned(),
            rows: a.rows(),
            cols: a.cols(),
            permutation: nf.perm.iter().map(|&p| p + 1).collect(),
            block_sizes: nf.block_sizes.clone(),
            isolated_blocks: nf.r,
            block_eigenvalues: nf.block_eigenvalues.iter().map(scalar_str).collect(),
            permuted: matrix_rows(&nf.permuted),
        }),
        disagreement: false,
        elapsed: None,
    })
}

fn solve_for(kind: KindArg, a: &TropMatrix, prune: bool) -> Result<tropsolve_core::SolutionSet, Failure> {
    match kind {
        KindArg::Component => solve_component_with(a, prune).map_err(core),
        KindArg::Composite => solve_composite_with(a, prune).map_err(core),
    }
}

fn cmd_solve(kind: KindArg, file: &Path, prune: bool) -> Result<Outcome, Failure> {
    let a = read_matrix(file)?;
    let started = Instant::now();
    let solution = solve_for(kind, &a, prune)?;
    let elapsed = started.elapsed();
    Ok(Outcome {
        report: Report::Solve(SolveReport {
            command: format!("solve {}", kind.name()),
            rows: a.rows(),
            cols: a.cols(),
            minimum: scalar_str(&solution.minimum),
            solution_generator: matrix_rows(&solution.s),
            partial_generator: matrix_rows(&solution.partial_generator),
            candidates: solution
                .candidates
                .iter()
                .map(CandidateEntry::from_candidate)
                .collect(),
        }),
        disagreement: false,
        elapsed: Some(elapsed),
    })
}

fn cmd_check(kind: KindArg, file: &Path, vector: &[String]) -> Result<Outcome, Failure> {
    let a = read_matrix(file)?;
    let x = crate::matfile::parse_vector_args(vector)
        .map_err(|e| input_error(format!("vector entry {}: {}", e.column, e.message)))?;
    let value = objective(kind.to_kind(), &a, &x).map_err(core)?;
    let member = check_membership(kind.to_kind(), &a, &x).map_err(core)?;
    Ok(Outcome {
        report: Report::Check(CheckReport {
            command: format!("check {}", kind.name()),
            rows: a.rows(),
            cols: a.cols(),
            vector: vector_entries(&x),
            objective: scalar_str(&value),
            member,
        }),
        disagreement: false,
        elapsed: None,
    })
}

fn cmd_verify(
    kind: KindArg,
    file: &Path,
    grid: &str,
    max_candidates: Option<u64>,
    prune: bool,
) -> Result<Outcome, Failure> {
    let a = read_matrix(file)?;
    let grid_spec = parse_grid(grid)?;
    let cap = candidate_cap(max_candidates)?;

    let started = Instant::now();
    let solution = solve_for(kind, &a, prune)?;
    let (grid_value, grid_argmin) = grid_minimum(kind.to_kind(), &a, &grid_spec, DEFAULT_GRID_CAP)
        .map_err(core)?;

    let level = level_for(kind, &a)?;
    let candidates = exhaustive_candidates(&a, kind.to_kind(), &level, cap).map_err(core)?;
    let accepted = candidates.iter().filter(|c| c.accepted).count();

    // Rebuild the minimum from the accepted closures alone: the ⊕-sum of a
    // closure's columns is a regular member of its candidate family, so its
    // objective must already attain the solver minimum.
    let mut enumeration_minimum: Option<TropScalar> = None;
    for candidate in candidates.iter().filter(|c| c.accepted) {
        let closure = star(&candidate.b_k).map_err(core)?;
        let member = closure
            .columns()
            .into_iter()
            .reduce(|x, y| x.add(&y).expect("columns share the dimension"))
            .expect("a square closure has at least one column");
        let value = objective(kind.to_kind(), &a, &member).map_err(core)?;
        let better = enumeration_minimum
            .as_ref()
            .map_or(true, |best| value.le(best));
        if better {
            enumeration_minimum = Some(value);
        }
    }
    let elapsed = started.elapsed();

    let grid_agrees = grid_value == solution.minimum;
    let enumeration_agrees = enumeration_minimum.as_ref() == Some(&solution.minimum);
    let agreement = grid_agrees && enumeration_agrees;
    Ok(Outcome {
        report: Report::Verify(VerifyReport {
            command: format!("verify {}", kind.name()),
            rows: a.rows(),
            cols: a.cols(),
            solver_minimum: scalar_str(&solution.minimum),
            grid: grid.to_owned(),
            grid_minimum: scalar_str(&grid_value),
            grid_argmin: vector_entries(&grid_argmin),
            grid_agrees,
            enumeration_total: candidates.len(),
            enumeration_accepted: accepted,
            enumeration_minimum: enumeration_minimum.as_ref().map(scalar_str),
            enumeration_agrees,
            agreement,
        }),
        disagreement: !agreement,
        elapsed: Some(elapsed),
    })
}

// ---------------------------------------------------------------------------
// Verify helpers
// ---------------------------------------------------------------------------

/// The enumeration level of `kind` for `a`: the leading eigenvalue λ₁ of the
/// normal form, or the composite level λ₁ ⊕ ⋯ ⊕ λ_s ⊕ λ₁⁻¹.
fn level_for(kind: KindArg, a: &TropMatrix) -> Result<TropScalar, Failure> {
    let nf = normal_form(a).map_err(core)?;
    let lambda1 = nf.block_eigenvalues[0].clone();
    match kind {
        KindArg::Component => Ok(lambda1),
        KindArg::Composite => {
            let inv = lambda1.inv().map_err(|_| core(CoreError::BottomLeadingEigenvalue))?;
            let rho = nf
                .block_eigenvalues
                .iter()
                .fold(inv, |acc, lam| acc.add(lam));
            Ok(rho)
        }
    }
}

/// Resolves the exhaustive-candidate cap: the flag wins over the
/// `TROPSOLVE_MAX_CANDIDATES` environment variable, which wins over the
/// library default.
fn candidate_cap(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(MAX_CANDIDATES_ENV) {
        Ok(raw) => raw.parse().map_err(|_| {
            input_error(format!("{MAX_CANDIDATES_ENV} must be an integer, got `{raw}`"))
        }),
        Err(_) => Ok(DEFAULT_CANDIDATE_CAP),
    }
}

/// Parses `LO:HI:STEP` into a grid, requiring finite bounds, a positive
/// step, and LO ≤ HI.
fn parse_grid(text: &str) -> Result<GridSpec, Failure> {
    let parts: Vec<&str> = text.split(':').collect();
    let &[lo, hi, step] = parts.as_slice() else {
        return Err(input_error(format!("grid must be LO:HI:STEP, got `{text}`")));
    };
    let parse = |token: &str| -> Result<TropScalar, Failure> {
        token
            .parse()
            .map_err(|e: CoreError| input_error(format!("grid bound: {e}")))
    };
    let lo = parse(lo)?;
    let hi = parse(hi)?;
    let step = parse(step)?;
    let finite = |s: &TropScalar| -> Result<(), Failure> {
        if s.is_zero() {
            Err(input_error("grid bounds must be finite".to_owned()))
        } else {
            Ok(())
        }
    };
    finite(&lo)?;
    finite(&hi)?;
    finite(&step)?;
    if !TropScalar::one().lt(&step) {
        return Err(input_error("the grid step must be positive".to_owned()));
    }
    if !lo.le(&hi) {
        return Err(input_error("the grid needs LO \u{2264} HI".to_owned()));
    }
    Ok(GridSpec::new(
        lo.as_finite().expect("checked finite").clone(),
        hi.as_finite().expect("checked finite").clone(),
        step.as_finite().expect("checked finite").clone(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_strings_parse_and_validate() {
        let grid = parse_grid("-3:3:1").unwrap();
        assert_eq!(grid.points_per_axis(), 7u32.into());
        let grid = parse_grid("-1/2:1/2:1/4").unwrap();
        assert_eq!(grid.points_per_axis(), 5u32.into());

        assert_eq!(parse_grid("1:2").unwrap_err().code, 2);
        assert_eq!(parse_grid("a:2:1").unwrap_err().code, 2);
        assert_eq!(parse_grid("-inf:2:1").unwrap_err().code, 2);
        assert_eq!(parse_grid("1:2:0").unwrap_err().code, 2);
        assert_eq!(parse_grid("3:2:1").unwrap_err().code, 2);
    }

    #[test]
    fn exit_codes_separate_input_hypothesis_and_internal_failures() {
        assert_eq!(
            exit_code(&CoreError::InvalidScalar {
                token: "x".to_owned()
            }),
            2
        );
        assert_eq!(exit_code(&CoreError::ZeroRow { row: 1 }), 3);
        assert_eq!(exit_code(&CoreError::BottomLeadingEigenvalue), 3);
        assert_eq!(exit_code(&CoreError::NoAcceptedCandidates), 4);
    }

    #[test]
    fn candidate_caps_prefer_the_flag() {
        assert_eq!(candidate_cap(Some(42)).unwrap(), 42);
        // The environment fallback is exercised through the binary tests to
        // keep this process's environment untouched.
        if std::env::var(MAX_CANDIDATES_ENV).is_err() {
            assert_eq!(candidate_cap(None).unwrap(), DEFAULT_CANDIDATE_CAP);
        }
    }
}
