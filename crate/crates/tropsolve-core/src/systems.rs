//! Solvers for one-sided max-plus vector problems and the column-dependence
//! machinery.
//!
//! Three problems over a square matrix A:
//!
//! * the bounded inequality A ⊗ x ≤ d, whose solutions are exactly
//!   x ≤ x̂ = (d⁻ ⊗ A)⁻ ([`solve_upper`]);
//! * the fixpoint inequality A ⊗ x ≤ x, whose regular solutions are exactly
//!   x = A* ⊗ u for regular u when Tr A ≤ 𝟙, and none exist otherwise
//!   ([`solve_fixpoint_inequality`]);
//! * the affine equation A ⊗ x ⊕ b = x over irreducible A, solved by
//!   x = A* ⊗ b with the free part generated by A^× when Tr A = 𝟙
//!   ([`solve_affine`]).
//!
//! Dependence of a vector on a set of columns ([`is_dependent`]) is decided
//! by residuation: the greatest x̂ with A ⊗ x̂ ≤ b is computed entrywise, and
//! b lies in the span iff A ⊗ x̂ = b. This agrees with the classical
//! criterion (A ⊗ (b⁻ ⊗ A)⁻)⁻ ⊗ b = 𝟙 on regular b and extends it soundly
//! to vectors with 𝟘 entries, where the conjugate b⁻ is not defined.
//! [`independent_columns`] reduces a generating set to an equivalent
//! independent one by that test.

use crate::error::{Error, Result};
use crate::linalg::{
    big_tr_bounded, conjugate_transpose, is_column_regular, mat_mul, star,
    times_operator, Matrix, TropMatrix, TropVector, Vector,
};
use crate::semifield::{Semifield, TropScalar};

/// Shape of a solution set returned by the equation solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionKind {
    /// Exactly one solution; [`EquationSolution::particular`] holds it.
    Unique,
    /// A family: particular solution plus a generator of the free part.
    Family,
    /// No regular solution exists.
    Infeasible,
}

/// Solution set of a vector equation or inequality.
///
/// The invariants are maintained by the constructors: `Unique` carries a
/// particular solution and no generator, `Family` carries both, and
/// `Infeasible` carries neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSolution {
    kind: SolutionKind,
    particular: Option<TropVector>,
    generator: Option<TropMatrix>,
}

impl EquationSolution {
    /// A unique solution.
    #[must_use]
    pub fn unique(particular: TropVector) -> Self {
        EquationSolution {
            kind: SolutionKind::Unique,
            particular: Some(particular),
            generator: None,
        }
    }

    /// A solution family: every x = particular ⊕ generator ⊗ u with regular
    /// u solves the system.
    #[must_use]
    pub fn family(particular: TropVector, generator: TropMatrix) -> Self {
        EquationSolution {
            kind: SolutionKind::Family,
            particular: Some(particular),
            generator: Some(generator),
        }
    }

    /// No regular solution.
    #[must_use]
    pub fn infeasible() -> Self {
        EquationSolution {
            kind: SolutionKind::Infeasible,
            particular: None,
            generator: None,
        }
    }

    /// The solution-set shape.
    #[must_use]
    pub fn kind(&self) -> SolutionKind {
        self.kind
    }

    /// The particular solution, present unless infeasible.
    #[must_use]
    pub fn particular(&self) -> Option<&TropVector> {
        self.particular.as_ref()
    }

    /// The free-part generator, present exactly for families.
    #[must_use]
    pub fn generator(&self) -> Option<&TropMatrix> {
        self.generator.as_ref()
    }
}

/// The maximal solution x̂ = (d⁻ ⊗ A)⁻ of A ⊗ x ≤ d: every x ≤ x̂ solves the
/// inequality and every solution is ≤ x̂. Entrywise,
/// x̂_j = min over finite a_ij of (d_i ⊘ a_ij).
///
/// # Errors
///
/// * [`Error::ShapeMismatch`] unless `d.dim() == a.rows()`;
/// * [`Error::ZeroColumn`] when a column of `a` is all-𝟘 (the maximal value
///   of that coordinate would be unbounded);
/// * [`Error::IrregularVector`] when `d` has a 𝟘 entry.
pub fn solve_upper(a: &TropMatrix, d: &TropVector) -> Result<TropVector> {
    if d.dim() != a.rows() {
        return Err(Error::ShapeMismatch {
            op: "solve_upper",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: d.dim(),
            rhs_cols: 1,
        });
    }
    if !is_column_regular(a) {
        let col = (0..a.cols())
            .find(|&j| (0..a.rows()).all(|i| a.get(i, j).is_zero()))
            .expect("some column is all-bottom");
        return Err(Error::ZeroColumn { col: col + 1 });
    }
    if let Some(index) = (0..d.dim()).find(|&i| d.get(i).is_zero()) {
        return Err(Error::IrregularVector { index: index + 1 });
    }
    // (d⁻ ⊗ A)⁻ computed through the conjugates of the 1-column shapes.
    let d_conj = conjugate_transpose(&d.as_column())?;
    let product = mat_mul(&d_conj, a)?;
    let x_hat = conjugate_transpose(&product)?;
    Ok(x_hat.column(0))
}

/// All regular solutions of the fixpoint inequality A ⊗ x ≤ x.
///
/// When Tr A ≤ 𝟙 the solutions are exactly x = A* ⊗ u with u regular: the
/// result is a family whose generator is A* and whose particular solution is
/// the all-𝟘 vector (the least solution). When Tr A > 𝟙 no regular solution
/// exists.
///
/// # Errors
///
/// Fails with [`Error::NotSquare`] on non-square input.
pub fn solve_fixpoint_inequality(a: &TropMatrix) -> Result<EquationSolution> {
    let (_, within_unit) = big_tr_bounded(a)?;
    if !within_unit {
        return Ok(EquationSolution::infeasible());
    }
    Ok(EquationSolution::family(
        Vector::zero(a.rows()),
        star(a)?,
    ))
}

/// All regular solutions of the affine equation A ⊗ x ⊕ b = x for an
/// irreducible matrix A and non-zero vector b.
///
/// * Tr A < 𝟙 → unique solution A* ⊗ b;
/// * Tr A = 𝟙 → family: particular A* ⊗ b, free part generated by A^×;
/// * Tr A > 𝟙 → no regular solution.
///
/// # Errors
///
/// * [`Error::NotSquare`] on non-square input;
/// * [`Error::ReducibleMatrix`] when `a` is reducible;
/// * [`Error::ZeroVector`] when `b` is all-𝟘;
/// * [`Error::ShapeMismatch`] unless `b.dim() == a.rows()`.
pub fn solve_affine(a: &TropMatrix, b: &TropVector) -> Result<EquationSolution> {
    if !crate::spectral::is_irreducible(a)? {
        return Err(Error::ReducibleMatrix);
    }
    if b.dim() != a.rows() {
        return Err(Error::ShapeMismatch {
            op: "solve_affine",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.dim(),
            rhs_cols: 1,
        });
    }
    if b.is_zero_vector() {
        return Err(Error::ZeroVector { op: "solve_affine" });
    }
    let (tr, within_unit) = big_tr_bounded(a)?;
    if !within_unit {
        return Ok(EquationSolution::infeasible());
    }
    let particular = mat_mul(&star(a)?, &b.as_column())?.column(0);
    if tr == TropScalar::one() {
        Ok(EquationSolution::family(particular, times_operator(a)?))
    } else {
        Ok(EquationSolution::unique(particular))
    }
}

/// The greatest x̂ with A ⊗ x̂ ≤ b: x̂_j is the minimum of b_i ⊘ a_ij over
/// rows with finite a_ij (𝟘 when such a row has b_i = 𝟘), and 𝟘 for
/// unconstrained all-𝟘 columns, the convention that makes span testing work.
fn greatest_subsolution(a: &TropMatrix, b: &TropVector) -> TropVector {
    let mut x_hat = Vector::zero(a.cols());
    for j in 0..a.cols() {
        let mut bound: Option<TropScalar> = None;
        for i in 0..a.rows() {
            let a_ij = a.get(i, j);
            if a_ij.is_zero() {
                continue;
            }
            let quotient = if b.get(i).is_zero() {
                TropScalar::bottom()
            } else {
                b.get(i).mul(&a_ij.inv().expect("finite entry inverts"))
            };
            bound = Some(match bound {
                None => quotient,
                Some(current) => {
                    if quotient.le(&current) {
                        quotient
                    } else {
                        current
                    }
                }
            });
        }
        if let Some(value) = bound {
            x_hat.set(j, value);
        }
    }
    x_hat
}

/// Whether `b` lies in the tropical column span of `a`, i.e. whether
/// b = a ⊗ u for some coefficient vector u. Decided by residuation: with
/// x̂ the greatest vector satisfying a ⊗ x̂ ≤ b, membership holds iff
/// a ⊗ x̂ = b. On regular b this is the classical criterion
/// (a ⊗ (b⁻ ⊗ a)⁻)⁻ ⊗ b = 𝟙.
///
/// # Errors
///
/// * [`Error::ZeroVector`] when `b` is all-𝟘;
/// * [`Error::ShapeMismatch`] unless `b.dim() == a.rows()`.
pub fn is_dependent(b: &TropVector, a: &TropMatrix) -> Result<bool> {
    if b.is_zero_vector() {
        return Err(Error::ZeroVector { op: "is_dependent" });
    }
    if b.dim() != a.rows() {
        return Err(Error::ShapeMismatch {
            op: "is_dependent",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.dim(),
            rhs_cols: 1,
        });
    }
    let x_hat = greatest_subsolution(a, b);
    Ok(a.mul_vector(&x_hat)? == *b)
}

/// Reduces the columns of `m` to an independent generating set with the same
/// span.
///
/// All-𝟘 columns are discarded first. The remaining columns are examined in
/// ascending index order; a column dependent on all the *other* columns
/// still alive (earlier survivors and later not-yet-examined columns alike)
/// is removed immediately. Every removed column is dependent on the retained
/// set, and no retained column is dependent on the others, so the scan is
/// idempotent.
///
/// # Errors
///
/// Fails with [`Error::AllBottomMatrix`] when every column is all-𝟘.
pub fn independent_columns(m: &TropMatrix) -> Result<TropMatrix> {
    let mut alive: Vec<usize> = (0..m.cols())
        .filter(|&j| (0..m.rows()).any(|i| !m.get(i, j).is_zero()))
        .collect();
    if alive.is_empty() {
        return Err(Error::AllBottomMatrix {
            op: "independent_columns",
        });
    }
    let columns = m.columns();
    let mut scan = 0usize;
    while scan < alive.len() && alive.len() > 1 {
        let candidate = alive[scan];
        let others: Vec<Vector<TropScalar>> = alive
            .iter()
            .filter(|&&j| j != candidate)
            .map(|&j| columns[j].clone())
            .collect();
        let against = Matrix::from_columns(&others);
        if is_dependent(&columns[candidate], &against)? {
            alive.remove(scan);
        } else {
            scan += 1;
        }
    }
    let kept: Vec<Vector<TropScalar>> = alive.iter().map(|&j| columns[j].clone()).collect();
    Ok(Matrix::from_columns(&kept))
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
