//! Command-line surface of the `tropsolve` binary.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use tropsolve_core::ProblemKind;

/// Exact max-plus spectral analysis and optimization.
///
/// Matrices live in files with a `rows cols` header followed by rows × cols
/// whitespace-separated entries; each entry is an integer, a fraction `p/q`,
/// or `-inf`.
#[derive(Debug, Parser)]
#[command(name = "tropsolve", version, about, max_term_width = 100)]
pub struct Cli {
    /// Output format for reports on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Line-oriented `key: value` text.
    Text,
    /// Pretty-printed JSON with a stable key order.
    Json,
}

/// Which of the two residual objectives a command targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// minimize (A ⊗ x)⁻ ⊗ x
    Component,
    /// minimize x⁻ ⊗ A ⊗ x ⊕ (A ⊗ x)⁻ ⊗ x
    Composite,
}

impl KindArg {
    #[must_use]
    pub fn to_kind(self) -> ProblemKind {
        match self {
            KindArg::Component => ProblemKind::Component,
            KindArg::Composite => ProblemKind::Composite,
        }
    }

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            KindArg::Component => "component",
            KindArg::Composite => "composite",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the spectral radius and per-block eigenvalues (plus the
    /// eigenvector generator when the matrix is irreducible).
    Eigen {
        /// Matrix file.
        file: PathBuf,
    },

    /// Print the block-triangular normal form: relabeling, block sizes,
    /// isolated block count, and per-block eigenvalues.
    NormalForm {
        /// Matrix file.
        file: PathBuf,
    },

    /// Compute the complete solution set of the chosen minimization problem.
    Solve {
        /// Objective to minimize.
        #[arg(value_enum)]
        kind: KindArg,
        /// Matrix file.
        file: PathBuf,
        /// Enumerate the full cartesian candidate family instead of the
        /// backtracking search.
        #[arg(long)]
        no_prune: bool,
    },

    /// Evaluate the objective on a vector and test solution membership.
    Check {
        /// Objective to evaluate.
        #[arg(value_enum)]
        kind: KindArg,
        /// Matrix file.
        file: PathBuf,
        /// Vector entries, one scalar token per coordinate.
        #[arg(required = true, allow_hyphen_values = true, num_args = 1..)]
        vector: Vec<String>,
    },

    /// Cross-check the solver against the brute-force references: a grid
    /// search for the minimum and the exhaustive candidate enumeration.
    Verify {
        /// Objective to verify.
        #[arg(value_enum)]
        kind: KindArg,
        /// Matrix file.
        file: PathBuf,
        /// Grid as LO:HI:STEP, each bound a scalar token (finite; step > 0).
        #[arg(long, default_value = "-3:3:1", allow_hyphen_values = true)]
        grid: String,
        /// Cap on the exhaustive candidate count (overrides the
        /// TROPSOLVE_MAX_CANDIDATES environment variable; default 10000).
        #[arg(long)]
        max_candidates: Option<u64>,
        /// Run the solver under verification without pruning.
        #[arg(long)]
        no_prune: bool,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_accepts_hyphenated_vector_tokens() {
        let cli = Cli::parse_from([
            "tropsolve", "check", "component", "m.trop", "0", "-inf", "-1",
        ]);
        match cli.command {
            Command::Check { vector, kind, .. } => {
                assert_eq!(vector, vec!["0", "-inf", "-1"]);
                assert_eq!(kind.to_kind(), ProblemKind::Component);
            }
            other => panic!("parsed into {other:?}"),
        }
    }

    #[test]
    fn verify_defaults_cover_the_documented_grid() {
        let cli = Cli::parse_from(["tropsolve", "verify", "composite", "m.trop"]);
        match cli.command {
            Command::Verify {
                grid,
                max_candidates,
                no_prune,
                ..
            } => {
                assert_eq!(grid, "-3:3:1");
                assert_eq!(max_candidates, None);
                assert!(!no_prune);
            }
            other => panic!("parsed into {other:?}"),
        }
    }

    #[test]
    fn format_flag_is_global() {
        let cli = Cli::parse_from(["tropsolve", "--format", "json", "eigen", "m.trop"]);
        assert_eq!(cli.format, Format::Json);
        let cli = Cli::parse_from(["tropsolve", "eigen", "m.trop", "--format", "json"]);
        assert_eq!(cli.format, Format::Json);
    }
}
