//! Complete solution sets of the two max-plus optimization problems.
//!
//! For a row-regular square matrix A with normal form of diagonal blocks
//! A₁₁, …, A_ss and block eigenvalues λ₁ ≤ … among the leading blocks:
//!
//! - the **component** problem `minimize (A ⊗ x)⁻ ⊗ x` attains λ₁⁻¹, and
//! - the **composite** problem `minimize x⁻ ⊗ A ⊗ x ⊕ (A ⊗ x)⁻ ⊗ x` attains
//!   μ = λ₁ ⊕ ⋯ ⊕ λ_s ⊕ λ₁⁻¹.
//!
//! Each solver returns two generators of the optimal set. The *partial*
//! generator is assembled block by block in closed form: a block whose
//! eigenvalue dominates λ₁ contributes the fixpoint generator of its own
//! cycles (placed in a column group of its own), while the remaining blocks
//! are driven by the earlier ones through the coupling term
//! W_i = ⊕_{j<i} A_ij ⊗ X_j. The *complete* generator S pools the closures
//! B_k* of all accepted sparsified candidates and keeps a maximal independent
//! subset of their columns, so that every optimal vector is S ⊗ u for some
//! regular u.
//!
//! Everything runs in the normal-form coordinates internally; results are
//! mapped back through the inverse permutation, so S, the partial generator,
//! and the candidate log all address the caller's original indices.

use crate::error::{Error, Result};
use crate::linalg::{
    first_zero_row, mat_add, mat_mul, scalar_mul, star, times_operator, Matrix, TropMatrix,
    TropVector,
};
use crate::semifield::{Semifield, TropScalar};
use crate::sparsifier::{enumerate_component, enumerate_composite, SparseCandidate};
use crate::spectral::{apply_permutation, invert_permutation, normal_form, NormalForm};
use crate::systems::independent_columns;

// ---------------------------------------------------------------------------
// Problem selection and result record
// ---------------------------------------------------------------------------

/// Which of the two objectives is being minimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    /// `minimize (A ⊗ x)⁻ ⊗ x`, attained at λ₁⁻¹.
    Component,
    /// `minimize x⁻ ⊗ A ⊗ x ⊕ (A ⊗ x)⁻ ⊗ x`, attained at μ.
    Composite,
}

/// The full outcome of a solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    /// The attained minimum of the objective over regular vectors.
    pub minimum: TropScalar,
    /// Complete generator: the optimal vectors are exactly S ⊗ u over
    /// regular u (closed under ⊕ and scalar ⊗).
    pub s: TropMatrix,
    /// Closed-form block generator; its span is contained in the span of S.
    pub partial_generator: TropMatrix,
    /// Sparsified candidate log in emission order, rejected entries included;
    /// empty for the closed-form solvers that need no enumeration.
    pub candidates: Vec<SparseCandidate>,
}

// ---------------------------------------------------------------------------
// Objective evaluation and membership
// ---------------------------------------------------------------------------

/// The residual u⁻ ⊗ v = ⊕ { u_i⁻¹ ⊗ v_i : u_i ≠ −∞ }; −∞ entries of u
/// contribute nothing (their rows impose no constraint).
fn residual(u: &TropVector, v: &TropVector) -> TropScalar {
    let mut acc = TropScalar::bottom();
    for (ui, vi) in u.iter().zip(v.iter()) {
        if ui.is_zero() {
            continue;
        }
        let term = ui.inv().expect("finite entries invert").mul(vi);
        acc = acc.add(&term);
    }
    acc
}

/// Evaluates the objective of `kind` at `x`.
///
/// The vector need not be fully finite: −∞ coordinates simply drop out of the
/// residuals, which lets the generator columns themselves be scored. Note the
/// theoretical minimum bounds the objective over *regular* vectors only.
///
/// # Errors
///
/// [`Error::ShapeMismatch`] when dimensions disagree, [`Error::NotSquare`]
/// for a rectangular matrix, and [`Error::ZeroVector`] when `x` or `A ⊗ x`
/// has no finite entry (the objective is undefined there).
pub fn objective(kind: ProblemKind, a: &TropMatrix, x: &TropVector) -> Result<TropScalar> {
    check_square(a, "objective")?;
    if x.is_zero_vector() {
        return Err(Error::ZeroVector { op: "objective" });
    }
    let ax = a.mul_vector(x)?;
    if ax.is_zero_vector() {
        return Err(Error::ZeroVector {
            op: "objective: A ⊗ x",
        });
    }
    let backward = residual(&ax, x);
    Ok(match kind {
        ProblemKind::Component => backward,
        ProblemKind::Composite => residual(x, &ax).add(&backward),
    })
}

/// Tests whether `x` belongs to the optimal set of `kind` for `a`, by the
/// defining inequalities: `x ≤ λ₁⁻¹ ⊗ A ⊗ x` for the component problem, and
/// `A ⊗ x ≤ μ ⊗ x` together with `x ≤ μ ⊗ A ⊗ x` for the composite one.
///
/// −∞ coordinates are admitted; the inequalities are read entry-wise.
///
/// # Errors
///
/// [`Error::NotSquare`] or [`Error::ShapeMismatch`] on malformed input,
/// [`Error::ZeroVector`] when `x` has no finite entry, and
/// [`Error::BottomLeadingEigenvalue`] when the leading eigenvalue needed for
/// the level is −∞.
pub fn check_membership(kind: ProblemKind, a: &TropMatrix, x: &TropVector) -> Result<bool> {
    check_square(a, "check_membership")?;
    if x.is_zero_vector() {
        return Err(Error::ZeroVector {
            op: "check_membership",
        });
    }
    let nf = normal_form(a)?;
    let lambda1 = leading_eigenvalue(&nf)?;
    let ax = a.mul_vector(x)?;
    match kind {
        ProblemKind::Component => x.le(&ax.scale(&lambda1.inv()?)),
        ProblemKind::Composite => {
            let mu = composite_level(&nf)?;
            Ok(ax.le(&x.scale(&mu))? && x.le(&ax.scale(&mu))?)
        }
    }
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

/// Solves the component problem with pruned enumeration. See
/// [`solve_component_with`].
///
/// # Errors
///
/// As for [`solve_component_with`].
pub fn solve_component(a: &TropMatrix) -> Result<SolutionSet> {
    solve_component_with(a, true)
}

/// Solves `minimize (A ⊗ x)⁻ ⊗ x`: the minimum is λ₁⁻¹ and the solution set
/// is generated by the returned matrices. `prune` selects the backtracking
/// enumeration; the plain mode visits every selection.
///
/// # Errors
///
/// [`Error::NotSquare`] for rectangular input, [`Error::ZeroRow`] when a row
/// has no finite entry, [`Error::BottomLeadingEigenvalue`] when λ₁ = −∞, and
/// [`Error::NoAcceptedCandidates`] if no sparsified candidate converges
/// (impossible under the hypotheses; reported rather than masked).
pub fn solve_component_with(a: &TropMatrix, prune: bool) -> Result<SolutionSet> {
    solve(ProblemKind::Component, a, prune)
}

/// Solves the composite problem with pruned enumeration. See
/// [`solve_composite_with`].
///
/// # Errors
///
/// As for [`solve_composite_with`].
pub fn solve_composite(a: &TropMatrix) -> Result<SolutionSet> {
    solve_composite_with(a, true)
}

/// Solves `minimize x⁻ ⊗ A ⊗ x ⊕ (A ⊗ x)⁻ ⊗ x`: the minimum is
/// μ = λ₁ ⊕ ⋯ ⊕ λ_s ⊕ λ₁⁻¹ and the solution set is generated by the returned
/// matrices. `prune` selects the domination pre-reduction plus backtracking;
/// the plain mode visits every selection.
///
/// # Errors
///
/// As for [`solve_component_with`].
pub fn solve_composite_with(a: &TropMatrix, prune: bool) -> Result<SolutionSet> {
    solve(ProblemKind::Composite, a, prune)
}

fn solve(kind: ProblemKind, a: &TropMatrix, prune: bool) -> Result<SolutionSet> {
    check_square(a, "solve")?;
    if let Some(row) = first_zero_row(a) {
        return Err(Error::ZeroRow { row });
    }
    let nf = normal_form(a)?;
    let lambda1 = leading_eigenvalue(&nf)?;

    let (minimum, candidates_nf) = match kind {
        ProblemKind::Component => (
            lambda1.inv()?,
            enumerate_component(&nf.permuted, &lambda1, prune)?,
        ),
        ProblemKind::Composite => {
            let mu = composite_level(&nf)?;
            let candidates = enumerate_composite(&nf.permuted, &mu, prune)?;
            (mu, candidates)
        }
    };

    let mut pooled: Vec<TropVector> = Vec::new();
    for candidate in candidates_nf.iter().filter(|c| c.accepted) {
        pooled.extend(star(&candidate.b_k)?.columns());
    }
    if pooled.is_empty() {
        return Err(Error::NoAcceptedCandidates);
    }
    let s_nf = independent_columns(&Matrix::from_columns(&pooled))?;
    let partial_nf = partial_generator_nf(kind, &nf)?;

    let inverse = invert_permutation(&nf.perm);
    let candidates = candidates_nf
        .into_iter()
        .map(|c| unpermute_candidate(c, &nf.perm, &inverse))
        .collect();
    Ok(SolutionSet {
        minimum,
        s: unpermute_rows(&s_nf, &nf.perm),
        partial_generator: unpermute_rows(&partial_nf, &nf.perm),
        candidates,
    })
}

// ---------------------------------------------------------------------------
// Closed-form operations
// ---------------------------------------------------------------------------

/// Solves `minimize x⁻ ⊗ A ⊗ x` directly: the minimum is the spectral radius
/// λ and the optimal vectors are generated by (λ⁻¹ ⊗ A)*.
///
/// # Errors
///
/// [`Error::NotSquare`] for rectangular input and
/// [`Error::BottomSpectralRadius`] when the matrix has no finite cycle (the
/// objective is then unbounded below over regular vectors).
pub fn min_xax(a: &TropMatrix) -> Result<SolutionSet> {
    check_square(a, "min_xax")?;
    let spectrum = crate::spectral::spectral_radius(a)?;
    if spectrum.rho.is_zero() {
        return Err(Error::BottomSpectralRadius);
    }
    let generator = star(&scalar_mul(&spectrum.rho.inv()?, a))?;
    let s = independent_columns(&generator)?;
    Ok(SolutionSet {
        minimum: spectrum.rho,
        s,
        partial_generator: generator,
        candidates: Vec::new(),
    })
}

/// The block-diagonal generator D = diag((λ₁⁻¹A₁₁)^×, …, (λ_s⁻¹A_ss)^×) of
/// the component problem, valid when every block eigenvalue dominates the
/// leading one; each D ⊗ u with regular u is then component-optimal. Rows
/// address the caller's original indices; columns are grouped block by block
/// in normal-form order.
///
/// # Errors
///
/// [`Error::NotSquare`] for rectangular input,
/// [`Error::BottomLeadingEigenvalue`] when λ₁ = −∞, and
/// [`Error::EigenvalueBelowLeading`] when some block eigenvalue lies below
/// λ₁, where this closed form does not apply.
pub fn block_diagonal_generator(a: &TropMatrix) -> Result<TropMatrix> {
    check_square(a, "block_diagonal_generator")?;
    let nf = normal_form(a)?;
    let lambda1 = leading_eigenvalue(&nf)?;
    for (i, value) in nf.block_eigenvalues.iter().enumerate() {
        if value.lt(&lambda1) {
            return Err(Error::EigenvalueBelowLeading {
                block: i + 1,
                value: value.clone(),
                leading: lambda1,
            });
        }
    }
    let blocks: Vec<TropMatrix> = (0..nf.block_count())
        .map(|i| {
            times_operator(&scalar_mul(
                &nf.block_eigenvalues[i].inv()?,
                &nf.diagonal_block(i),
            ))
        })
        .collect::<Result<_>>()?;
    let d_nf = block_diagonal(&blocks);
    Ok(unpermute_rows(&d_nf, &nf.perm))
}

/// Solves `A ⊗ x = x` completely when every block eigenvalue equals the
/// unit: the composite minimum μ = 𝟙 is attained exactly at the fixpoints,
/// and the block recursion yields their generator.
///
/// # Errors
///
/// [`Error::NotSquare`] for rectangular input and
/// [`Error::NonUnitEigenvalue`] naming the first block whose eigenvalue
/// differs from 𝟙.
pub fn solve_unit_spectrum(a: &TropMatrix) -> Result<SolutionSet> {
    check_square(a, "solve_unit_spectrum")?;
    let nf = normal_form(a)?;
    for (i, value) in nf.block_eigenvalues.iter().enumerate() {
        if !value.is_one() {
            return Err(Error::NonUnitEigenvalue {
                block: i + 1,
                value: value.clone(),
            });
        }
    }
    let partial_nf = partial_generator_nf(ProblemKind::Composite, &nf)?;
    let s_nf = independent_columns(&partial_nf)?;
    Ok(SolutionSet {
        minimum: TropScalar::one(),
        s: unpermute_rows(&s_nf, &nf.perm),
        partial_generator: unpermute_rows(&partial_nf, &nf.perm),
        candidates: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Block recursion
// ---------------------------------------------------------------------------

/// Builds the partial generator in normal-form coordinates.
///
/// Blocks with λᵢ ≥ λ₁ own a column group filled with the fixpoint generator
/// (λᵢ⁻¹Aᵢᵢ)^× of their own cycles. The coupling term W_i = ⊕_{j<i} A_ij ⊗ X_j
/// feeds the remaining rows: the component problem routes it only through the
/// dominated blocks as λ₁⁻¹ ⊗ (λ₁⁻¹Aᵢᵢ)* ⊗ W_i, while the composite problem
/// additionally propagates it through dominant blocks as
/// λᵢ⁻¹ ⊗ (λᵢ⁻¹Aᵢᵢ)* ⊗ W_i.
fn partial_generator_nf(kind: ProblemKind, nf: &NormalForm) -> Result<TropMatrix> {
    let block_count = nf.block_count();
    let offsets = nf.block_offsets();
    let lambda1 = leading_eigenvalue(nf)?;

    let mut eigen: Vec<Option<TropMatrix>> = Vec::with_capacity(block_count);
    let mut group_start = vec![0usize; block_count];
    let mut total_cols = 0usize;
    for i in 0..block_count {
        let value = &nf.block_eigenvalues[i];
        if value.ge(&lambda1) {
            let generator = times_operator(&scalar_mul(&value.inv()?, &nf.diagonal_block(i)))?;
            group_start[i] = total_cols;
            total_cols += generator.cols();
            eigen.push(Some(generator));
        } else {
            eigen.push(None);
        }
    }

    let mut x_blocks: Vec<TropMatrix> = Vec::with_capacity(block_count);
    for i in 0..block_count {
        let size = nf.block_sizes[i];
        let dominant = eigen[i].is_some();
        let needs_coupling = match kind {
            ProblemKind::Component => !dominant,
            ProblemKind::Composite => true,
        };

        let mut coupled: Option<TropMatrix> = None;
        if needs_coupling && i > 0 {
            let mut w: TropMatrix = Matrix::zero(size, total_cols);
            for j in 0..i {
                let arcs = nf.permuted.submatrix(
                    offsets[i],
                    offsets[i] + size,
                    offsets[j],
                    offsets[j] + nf.block_sizes[j],
                );
                if arcs.is_zero_matrix() {
                    continue;
                }
                w = mat_add(&w, &mat_mul(&arcs, &x_blocks[j])?)?;
            }
            if !w.is_zero_matrix() {
                let level = if dominant {
                    &nf.block_eigenvalues[i]
                } else {
                    &lambda1
                };
                let level_inv = level.inv()?;
                let closure = star(&scalar_mul(&level_inv, &nf.diagonal_block(i)))?;
                coupled = Some(scalar_mul(&level_inv, &mat_mul(&closure, &w)?));
            }
        }

        let placed = eigen[i].as_ref().map(|generator| {
            let mut block: TropMatrix = Matrix::zero(size, total_cols);
            for r in 0..size {
                for c in 0..generator.cols() {
                    block.set(r, group_start[i] + c, generator.get(r, c).clone());
                }
            }
            block
        });

        x_blocks.push(match (coupled, placed) {
            (Some(c), Some(p)) => mat_add(&c, &p)?,
            (Some(c), None) => c,
            (None, Some(p)) => p,
            (None, None) => Matrix::zero(size, total_cols),
        });
    }

    let mut rows: Vec<Vec<TropScalar>> = Vec::with_capacity(nf.perm.len());
    for block in &x_blocks {
        for r in 0..block.rows() {
            rows.push((0..block.cols()).map(|c| block.get(r, c).clone()).collect());
        }
    }
    Ok(Matrix::from_rows(rows))
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

fn check_square(a: &TropMatrix, op: &'static str) -> Result<()> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            op,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(())
}

fn leading_eigenvalue(nf: &NormalForm) -> Result<TropScalar> {
    let lambda1 = nf.block_eigenvalues[0].clone();
    if lambda1.is_zero() {
        return Err(Error::BottomLeadingEigenvalue);
    }
    Ok(lambda1)
}

/// μ = λ₁ ⊕ ⋯ ⊕ λ_s ⊕ λ₁⁻¹: the spectral radius joined with the inverse of
/// the leading eigenvalue.
fn composite_level(nf: &NormalForm) -> Result<TropScalar> {
    let lambda1 = leading_eigenvalue(nf)?;
    let mut mu = lambda1.inv()?;
    for value in &nf.block_eigenvalues {
        mu = mu.add(value);
    }
    Ok(mu)
}

/// Maps a matrix whose rows live in normal-form coordinates back to the
/// original row indices (columns are untouched).
fn unpermute_rows(m: &TropMatrix, perm: &[usize]) -> TropMatrix {
    let rows: Vec<Vec<TropScalar>> = perm
        .iter()
        .map(|&p| (0..m.cols()).map(|c| m.get(p, c).clone()).collect())
        .collect();
    Matrix::from_rows(rows)
}

/// Maps a candidate produced in normal-form coordinates back to the original
/// indices: rows and columns of both matrices are conjugated by the inverse
/// permutation and the selection vector is relabeled accordingly.
fn unpermute_candidate(
    candidate: SparseCandidate,
    perm: &[usize],
    inverse: &[usize],
) -> SparseCandidate {
    let selection = perm
        .iter()
        .map(|&p| inverse[candidate.selection[p]])
        .collect();
    SparseCandidate {
        selection,
        a_k: apply_permutation(&candidate.a_k, inverse),
        b_k: apply_permutation(&candidate.b_k, inverse),
        tr_b_k: candidate.tr_b_k,
        accepted: candidate.accepted,
    }
}

/// Stacks square or rectangular blocks along the diagonal, −∞ elsewhere.
fn block_diagonal(blocks: &[TropMatrix]) -> TropMatrix {
    let total_rows: usize = blocks.iter().map(Matrix::rows).sum();
    let total_cols: usize = blocks.iter().map(Matrix::cols).sum();
    let mut out: TropMatrix = Matrix::zero(total_rows, total_cols);
    let (mut r0, mut c0) = (0, 0);
    for block in blocks {
        for r in 0..block.rows() {
            for c in 0..block.cols() {
                out.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
        r0 += block.rows();
        c0 += block.cols();
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
