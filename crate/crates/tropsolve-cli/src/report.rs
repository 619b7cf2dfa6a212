//! Command reports: one struct per subcommand, rendered either as aligned
//! `key: value` text or as JSON.
//!
//! Reports are deterministic — identical inputs and flags produce
//! byte-identical output. Scalars render through the canonical text syntax
//! (`-inf`, a reduced integer, or `p/q`; never floats), matrices as arrays of
//! row arrays of such tokens, and every index (permutation positions, row
//! numbers, selection columns) is 1-based on the way out. Wall-clock timings
//! never enter the serialized form; the runner reports them on stderr.

use serde::Serialize;
use tropsolve_core::sparsifier::SparseCandidate;
use tropsolve_core::{TropMatrix, TropScalar, TropVector};

/// Scalar in the canonical text syntax.
#[must_use]
pub fn scalar_str(s: &TropScalar) -> String {
    s.to_string()
}

/// Matrix as rows of canonical scalar tokens.
#[must_use]
pub fn matrix_rows(m: &TropMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| scalar_str(m.get(i, j))).collect())
        .collect()
}

/// Vector as canonical scalar tokens.
#[must_use]
pub fn vector_entries(v: &TropVector) -> Vec<String> {
    v.iter().map(scalar_str).collect()
}

/// One enumerated candidate: the kept column per row (1-based), the
/// accumulated trace of its companion matrix, and the convergence verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateEntry {
    pub selection: Vec<usize>,
    pub trace: String,
    pub accepted: bool,
}

impl CandidateEntry {
    #[must_use]
    pub fn from_candidate(c: &SparseCandidate) -> Self {
        CandidateEntry {
            selection: c.selection.iter().map(|&j| j + 1).collect(),
            trace: scalar_str(&c.tr_b_k),
            accepted: c.accepted,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EigenReport {
    pub command: String,
    pub rows: usize,
    pub cols: usize,
    pub spectral_radius: String,
    pub block_eigenvalues: Vec<String>,
    pub irreducible: bool,
    /// Columns generate the eigenvectors; present only for irreducible input.
    pub eigenvector_generator: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize)]
pub struct NormalFormReport {
    pub command: String,
    pub rows: usize,
    pub cols: usize,
    /// Position of each original row after relabeling (1-based).
    pub permutation: Vec<usize>,
    pub block_sizes: Vec<usize>,
    /// Number of leading blocks with no couplings to earlier ones.
    pub isolated_blocks: usize,
    pub block_eigenvalues: Vec<String>,
    pub permuted: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub command: String,
    pub rows: usize,
    pub cols: usize,
    pub minimum: String,
    pub solution_generator: Vec<Vec<String>>,
    pub partial_generator: Vec<Vec<String>>,
    pub candidates: Vec<CandidateEntry>,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub rows: usize,
    pub cols: usize,
    pub vector: Vec<String>,
    pub objective: String,
    pub member: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub command: String,
    pub rows: usize,
    pub cols: usize,
    pub solver_minimum: String,
    pub grid: String,
    pub grid_minimum: String,
    pub grid_argmin: Vec<String>,
    pub grid_agrees: bool,
    pub enumeration_total: usize,
    pub enumeration_accepted: usize,
    /// Best objective over regular members rebuilt from the accepted
    /// closures; absent when nothing was accepted.
    pub enumeration_minimum: Option<String>,
    pub enumeration_agrees: bool,
    pub agreement: bool,
}

/// Any command report, ready for rendering.
#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Eigen(EigenReport),
    NormalForm(NormalFormReport),
    Solve(SolveReport),
    Check(CheckReport),
    Verify(VerifyReport),
}

impl Report {
    /// Renders the report as JSON with a trailing newline.
    ///
    /// # Panics
    ///
    /// Never: every report field serializes infallibly.
    #[must_use]
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports always serialize");
        out.push('\n');
        out
    }

    /// Renders the report as line-oriented text.
    #[must_use]
    pub fn to_text(&self) -> String {
        match self {
            Report::Eigen(r) => r.to_text(),
            Report::NormalForm(r) => r.to_text(),
            Report::Solve(r) => r.to_text(),
            Report::Check(r) => r.to_text(),
            Report::Verify(r) => r.to_text(),
        }
    }
}

fn matrix_block(out: &mut String, label: &str, rows: &[Vec<String>]) {
    out.push_str(label);
    out.push_str(":\n");
    for row in rows {
        out.push_str("  ");
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

fn joined(items: &[String]) -> String {
    items.join(" ")
}

fn joined_usize(items: &[usize]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl EigenReport {
    fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}x{} matrix\n", self.rows, self.cols));
        out.push_str(&format!("spectral radius: {}\n", self.spectral_radius));
        out.push_str(&format!(
            "block eigenvalues: {}\n",
            joined(&self.block_eigenvalues)
        ));
        out.push_str(&format!("irreducible: {}\n", self.irreducible));
        if let Some(generator) = &self.eigenvector_generator {
            matrix_block(&mut out, "eigenvector generator", generator);
        }
        out
    }
}

impl NormalFormReport {
    fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}x{} matrix\n", self.rows, self.cols));
        out.push_str(&format!("permutation: {}\n", joined_usize(&self.permutation)));
        out.push_str(&format!("block sizes: {}\n", joined_usize(&self.block_sizes)));
        out.push_str(&format!("isolated blocks: {}\n", self.isolated_blocks));
        out.push_str(&format!(
            "block eigenvalues: {}\n",
            joined(&self.block_eigenvalues)
        ));
        matrix_block(&mut out, "permuted matrix", &self.permuted);
        out
    }
}

impl SolveReport {
    fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}x{} matrix\n", self.rows, self.cols));
        out.push_str(&format!("minimum: {}\n", self.minimum));
        matrix_block(&mut out, "solution generator", &self.solution_generator);
        matrix_block(&mut out, "partial generator", &self.partial_generator);
        let accepted = self.candidates.iter().filter(|c| c.accepted).count();
        out.push_str(&format!(
            "candidates: {} total, {} accepted\n",
            self.candidates.len(),
            accepted
        ));
        for candidate in &self.candidates {
            out.push_str(&format!(
                "  selection {}: trace {}, {}\n",
                joined_usize(&candidate.selection),
                candidate.trace,
                if candidate.accepted { "accepted" } else { "rejected" }
            ));
        }
        out
    }
}

impl CheckReport {
    fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}x{} matrix\n", self.rows, self.cols));
        out.push_str(&format!("vector: {}\n", joined(&self.vector)));
        out.push_str(&format!("objective: {}\n", self.objective));
        out.push_str(&format!("member: {}\n", self.member));
        out
    }
}

impl VerifyReport {
    fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}x{} matrix\n", self.rows, self.cols));
        out.push_str(&format!("solver minimum: {}\n", self.solver_minimum));
        out.push_str(&format!("grid: {}\n", self.grid));
        out.push_str(&format!("grid minimum: {}\n", self.grid_minimum));
        out.push_str(&format!("grid argmin: {}\n", joined(&self.grid_argmin)));
        out.push_str(&format!("grid agrees: {}\n", self.grid_agrees));
        out.push_str(&format!(
            "enumeration: {} total, {} accepted\n",
            self.enumeration_total, self.enumeration_accepted
        ));
        out.push_str(&format!(
            "enumeration minimum: {}\n",
            self.enumeration_minimum.as_deref().unwrap_or("none")
        ));
        out.push_str(&format!("enumeration agrees: {}\n", self.enumeration_agrees));
        out.push_str(&format!(
            "verdict: {}\n",
            if self.agreement { "agreement" } else { "disagreement" }
        ));
        out
    }
}
