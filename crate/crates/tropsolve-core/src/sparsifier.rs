//! Sparsified candidate generators for the two optimization problems.
//!
//! Both solvers reduce to the same combinatorial core: given a row-regular
//! square matrix A over the max-plus semifield, keep exactly one finite entry
//! in every row. Each such selection k yields a sparse matrix A_k ≤ A with a
//! companion matrix B_k whose closure B_k* generates candidate solutions:
//!
//! - component problem (level λ₁ = leading eigenvalue):
//!   B_k = A_k⁻ ⊗ (A ⊕ λ₁·I),
//! - composite problem (level μ ≥ 𝟘 = the unit):
//!   B_k = A_k⁻ ⊗ A ⊕ μ⁻¹·(A_k⁻ ⊕ A).
//!
//! A candidate contributes to the solution set exactly when Tr(B_k) ≤ 𝟙, in
//! which case B_k* converges; the flag is decided by the early-terminating
//! trace accumulation, so a rejected candidate records the partial trace that
//! first exceeded the unit.
//!
//! Enumeration runs in two modes. The plain mode visits the full cartesian
//! product of per-row finite positions. The pruned mode runs a backtracking
//! search that eliminates provably dominated choices row by row: once row p is
//! fixed to column q, an entry a_ij below it is discarded whenever the fixed
//! choice already forces a_iq ⊗ x_q ≥ a_ij ⊗ x_j for every solution x under
//! construction. Pruning narrows the per-row choices only — the companion
//! matrices B_k are always built from the enumeration input, never from the
//! narrowed copies — so every emitted candidate is also a plain-mode
//! candidate and the generated solution set is unchanged.
//!
//! Selections are emitted in lexicographic order (row 0 outermost), and both
//! modes deduplicate by selection vector before the acceptance test.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::linalg::{
    big_tr_bounded, conjugate_transpose, first_zero_row, mat_add, mat_mul, scalar_mul, Matrix,
    TropMatrix,
};
use crate::semifield::{Semifield, TropScalar};

// ---------------------------------------------------------------------------
// Candidate record
// ---------------------------------------------------------------------------

/// One sparsified candidate: a per-row column selection together with the
/// derived matrices and the outcome of the convergence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseCandidate {
    /// Column kept in each row (0-based, one entry per row).
    pub selection: Vec<usize>,
    /// The input matrix restricted to the selected entries; everything else
    /// is −∞.
    pub a_k: TropMatrix,
    /// Companion matrix whose closure generates this candidate's solutions.
    pub b_k: TropMatrix,
    /// Accumulated trace ⊕_m tr(B_kᵐ), stopped at the first partial sum
    /// exceeding the unit; equals the full accumulation iff `accepted`.
    pub tr_b_k: TropScalar,
    /// Whether Tr(B_k) ≤ 𝟙, i.e. whether B_k* converges.
    pub accepted: bool,
}

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

/// Enumerates the sparsified candidates of the component problem
/// `minimize (A ⊗ x)⁻ ⊗ x` at level `lambda1`, the leading eigenvalue of the
/// normal form of `a`.
///
/// With `prune` set, dominated per-row choices are eliminated by the
/// backtracking rules; otherwise the full cartesian product of finite
/// positions is visited. Candidates appear in lexicographic selection order,
/// rejected ones included.
///
/// # Errors
///
/// [`Error::NotSquare`] for a rectangular input, [`Error::ZeroRow`] when some
/// row has no finite entry, and [`Error::BottomLeadingEigenvalue`] when
/// `lambda1` is −∞ (the objective is then unbounded below).
pub fn enumerate_component(
    a: &TropMatrix,
    lambda1: &TropScalar,
    prune: bool,
) -> Result<Vec<SparseCandidate>> {
    validate(a, "enumerate_component")?;
    if lambda1.is_zero() {
        return Err(Error::BottomLeadingEigenvalue);
    }
    let selections = if prune {
        backtracked_selections(a, lambda1)
    } else {
        cartesian_selections(a)
    };
    let shifted = mat_add(a, &scalar_mul(lambda1, &Matrix::identity(a.rows())))?;
    collect(a, selections, |conj| mat_mul(conj, &shifted))
}

/// Enumerates the sparsified candidates of the composite problem
/// `minimize x⁻ ⊗ A ⊗ x ⊕ (A ⊗ x)⁻ ⊗ x` at level `mu`, the attained minimum.
///
/// With `prune` set, the matrix is first narrowed by the domination
/// pre-reduction (an entry loses to a two-step detour reaching level μ), then
/// the backtracking rules run on the narrowed copy. Candidate matrices are
/// built from the original input either way.
///
/// # Errors
///
/// [`Error::NotSquare`] for a rectangular input, [`Error::ZeroRow`] when some
/// row has no finite entry, and [`Error::LevelBelowUnit`] when `mu` < 𝟙 (no
/// vector attains a level below the unit).
pub fn enumerate_composite(
    a: &TropMatrix,
    mu: &TropScalar,
    prune: bool,
) -> Result<Vec<SparseCandidate>> {
    validate(a, "enumerate_composite")?;
    if mu.lt(&TropScalar::one()) {
        return Err(Error::LevelBelowUnit { level: mu.clone() });
    }
    let mu_inv = mu.inv()?;
    let selections = if prune {
        let reduced = prereduce_composite(a, mu);
        debug_assert!(first_zero_row(&reduced).is_none());
        backtracked_selections(&reduced, &mu_inv)
    } else {
        cartesian_selections(a)
    };
    collect(a, selections, |conj| {
        let linear = mat_mul(conj, a)?;
        let shifted = scalar_mul(&mu_inv, &mat_add(conj, a)?);
        mat_add(&linear, &shifted)
    })
}

// ---------------------------------------------------------------------------
// Shared assembly
// ---------------------------------------------------------------------------

fn validate(a: &TropMatrix, op: &'static str) -> Result<()> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            op,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if let Some(row) = first_zero_row(a) {
        return Err(Error::ZeroRow { row });
    }
    Ok(())
}

/// Builds the candidate records for `selections`, deduplicating by selection
/// vector, restricting `a` to each selection, and running the convergence
/// test on the companion matrix produced by `make_b` from the conjugate A_k⁻.
fn collect<F>(
    a: &TropMatrix,
    selections: Vec<Vec<usize>>,
    make_b: F,
) -> Result<Vec<SparseCandidate>>
where
    F: Fn(&TropMatrix) -> Result<TropMatrix>,
{
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for selection in selections {
        if !seen.insert(selection.clone()) {
            continue;
        }
        let a_k = restrict_to_selection(a, &selection);
        let conj = conjugate_transpose(&a_k)?;
        let b_k = make_b(&conj)?;
        let (tr_b_k, accepted) = big_tr_bounded(&b_k)?;
        out.push(SparseCandidate {
            selection,
            a_k,
            b_k,
            tr_b_k,
            accepted,
        });
    }
    Ok(out)
}

fn restrict_to_selection(a: &TropMatrix, selection: &[usize]) -> TropMatrix {
    let mut m = Matrix::zero(a.rows(), a.cols());
    for (i, &j) in selection.iter().enumerate() {
        m.set(i, j, a.get(i, j).clone());
    }
    m
}

// ---------------------------------------------------------------------------
// Plain enumeration
// ---------------------------------------------------------------------------

/// Cartesian product of the finite positions of each row, in lexicographic
/// order (the last row's choice varies fastest).
fn cartesian_selections(a: &TropMatrix) -> Vec<Vec<usize>> {
    let n = a.rows();
    let choices: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| !a.get(i, j).is_zero()).collect())
        .collect();
    let mut out = Vec::new();
    let mut index = vec![0usize; n];
    loop {
        out.push(
            index
                .iter()
                .zip(&choices)
                .map(|(&k, row)| row[k])
                .collect(),
        );
        let mut r = n;
        loop {
            if r == 0 {
                return out;
            }
            r -= 1;
            index[r] += 1;
            if index[r] < choices[r].len() {
                break;
            }
            index[r] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Backtracking elimination
// ---------------------------------------------------------------------------

/// Depth-first enumeration that fixes one row at a time and narrows the rows
/// below it. `theta` is the level scalar entering the row-p absorption term
/// (λ₁ for the component problem, μ⁻¹ for the composite one).
fn backtracked_selections(a: &TropMatrix, theta: &TropScalar) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(a.rows());
    backtrack(a, 0, theta, &mut prefix, &mut out);
    out
}

fn backtrack(
    m: &TropMatrix,
    p: usize,
    theta: &TropScalar,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = m.rows();
    for q in 0..n {
        if m.get(p, q).is_zero() {
            continue;
        }
        prefix.push(q);
        if p + 1 == n {
            out.push(prefix.clone());
        } else {
            let child = narrow(m, p, q, theta);
            backtrack(&child, p + 1, theta, prefix, out);
        }
        prefix.pop();
    }
}

/// Fixes the choice (p, q) and discards dominated entries in the rows below.
///
/// Every condition reads the matrix as it stood on entry to this step; the
/// eliminations are written to the returned copy. Fixing row p yields the
/// bound x_q ≥ a_pq⁻¹ ⊗ (a_pj ⊗ x_j ⊕ (a_pp ⊕ θ) ⊗ x_p) on any solution x
/// under construction, so for a lower row i any entry a_ij with
/// a_iq ⊗ a_pq⁻¹ ⊗ a_pj ≥ a_ij is redundant and is discarded (for j = p the
/// absorption term a_pp ⊕ θ replaces a_pj): the term a_iq ⊗ x_q then matches
/// or beats a_ij ⊗ x_j on every such solution, so the row maximum survives
/// among the kept entries and no generated solution is lost.
///
/// Discarding never touches column q, so no row loses its last finite entry.
fn narrow(m: &TropMatrix, p: usize, q: usize, theta: &TropScalar) -> TropMatrix {
    let n = m.rows();
    let bottom = TropScalar::bottom();
    let mut child = m.clone();
    for j in 0..n {
        if j != q {
            child.set(p, j, bottom.clone());
        }
    }
    let pivot_inv = m
        .get(p, q)
        .inv()
        .expect("the branch guard keeps the pivot finite");
    for i in p + 1..n {
        let a_iq = m.get(i, q);
        if a_iq.is_zero() {
            continue; // every condition carries the factor a_iq
        }
        let coeff = a_iq.mul(&pivot_inv);
        for j in 0..n {
            if j == q || m.get(i, j).is_zero() {
                continue;
            }
            let reach = if j == p {
                coeff.mul(&m.get(p, p).add(theta))
            } else {
                coeff.mul(m.get(p, j))
            };
            if reach.ge(m.get(i, j)) {
                child.set(i, j, bottom.clone());
            }
        }
    }
    child
}

// ---------------------------------------------------------------------------
// Composite pre-reduction
// ---------------------------------------------------------------------------

/// Discards entries that can never carry the row maximum of a composite
/// solution at level `mu`, iterating to a fixed point: an entry a_iq is
/// dominated when some detour p ≠ q satisfies a_ip ⊗ a_pq ≥ μ ⊗ a_iq, since
/// a_ip ⊗ x_p ≥ a_iq ⊗ x_q then holds on every vector with A ⊗ x ≤ μ ⊗ x.
///
/// The premises read the current working copy, so one elimination can enable
/// the next within the same pass. The rule requires a second finite entry in
/// the same row, so no row ever loses its last finite entry.
fn prereduce_composite(a: &TropMatrix, mu: &TropScalar) -> TropMatrix {
    let n = a.rows();
    let bottom = TropScalar::bottom();
    let mut m = a.clone();
    loop {
        let mut changed = false;
        for i in 0..n {
            for q in 0..n {
                if m.get(i, q).is_zero() {
                    continue;
                }
                let threshold = mu.mul(m.get(i, q));
                let dominated = (0..n).any(|p| {
                    p != q
                        && !m.get(i, p).is_zero()
                        && !m.get(p, q).is_zero()
                        && m.get(i, p).mul(m.get(p, q)).ge(&threshold)
                });
                if dominated {
                    m.set(i, q, bottom.clone());
                    changed = true;
                }
            }
        }
        if !changed {
            return m;
        }
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
