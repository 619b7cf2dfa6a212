//! Dense matrices and column vectors over an idempotent semifield.
//!
//! The layer is generic over [`Semifield`] so that nothing here can silently
//! assume max-plus; the toolkit's canonical aliases are [`TropMatrix`] and
//! [`TropVector`]. Provided operations:
//!
//! * entrywise ⊕ ([`mat_add`]), the ⊕/⊗ matrix product ([`mat_mul`]), and
//!   scaling by a scalar ([`scalar_mul`]);
//! * the conjugate transpose A⁻ with (i,j) entry inv(a_ji) ([`conjugate_transpose`]);
//! * the trace tr A = ⊕ᵢ aᵢᵢ ([`trace`]) and the cycle bound
//!   Tr A = tr A ⊕ tr A² ⊕ ⋯ ⊕ tr Aⁿ ([`big_tr`]);
//! * the Kleene closures A* = I ⊕ A ⊕ ⋯ ⊕ Aⁿ⁻¹ ([`star`]) and
//!   A⁺ = A ⊕ A² ⊕ ⋯ ⊕ Aⁿ ([`plus`]), defined whenever Tr A ≤ 𝟙;
//! * the fixpoint generator A^× ([`times_operator`]): the columns of A⁺ whose
//!   diagonal entry equals 𝟙;
//! * regularity predicates ([`is_row_regular`], [`is_column_regular`],
//!   [`Vector::is_regular`]).
//!
//! Shapes are validated by every binary operation; matrices and vectors are
//! never empty.

use std::fmt;

use crate::error::{Error, Result};
use crate::semifield::Semifield;
use crate::semifield::TropScalar;

/// Dense row-major matrix over a semifield scalar `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Dense column vector over a semifield scalar `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector<S> {
    data: Vec<S>,
}

/// The canonical max-plus matrix.
pub type TropMatrix = Matrix<TropScalar>;

/// The canonical max-plus column vector.
pub type TropVector = Vector<TropScalar>;

impl<S: Semifield> Matrix<S> {
    /// Builds a matrix from row-major data.
    ///
    /// # Panics
    ///
    /// Panics if `rows` or `cols` is zero or if `data.len() != rows * cols`.
    #[must_use]
    #[track_caller]
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix shape must be at least 1x1");
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    /// Builds a matrix with every entry equal to `value`.
    ///
    /// # Panics
    ///
    /// Panics if `rows` or `cols` is zero.
    #[must_use]
    #[track_caller]
    pub fn filled(rows: usize, cols: usize, value: &S) -> Self {
        Matrix::new(rows, cols, vec![value.clone(); rows * cols])
    }

    /// The all-𝟘 matrix.
    ///
    /// # Panics
    ///
    /// Panics if `rows` or `cols` is zero.
    #[must_use]
    #[track_caller]
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, &S::zero())
    }

    /// The identity: 𝟙 on the diagonal, 𝟘 elsewhere.
    ///
    /// # Panics
    ///
    /// Panics if `n` is zero.
    #[must_use]
    #[track_caller]
    pub fn identity(n: usize) -> Self {
        let mut result = Matrix::zero(n, n);
        for i in 0..n {
            result.set(i, i, S::one());
        }
        result
    }

    /// Builds a matrix from a list of equally long rows.
    ///
    /// # Panics
    ///
    /// Panics if `rows` is empty, a row is empty, or the rows are ragged.
    #[must_use]
    #[track_caller]
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(
            rows.iter().all(|row| row.len() == cols),
            "all rows must have equal length"
        );
        let n_rows = rows.len();
        Matrix::new(n_rows, cols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    ///
    /// # Panics
    ///
    /// Panics if `columns` is empty or the vectors have differing dimensions.
    #[must_use]
    #[track_caller]
    pub fn from_columns(columns: &[Vector<S>]) -> Self {
        assert!(!columns.is_empty(), "matrix needs at least one column");
        let rows = columns[0].dim();
        assert!(
            columns.iter().all(|col| col.dim() == rows),
            "all columns must have equal dimension"
        );
        let mut result = Matrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for i in 0..rows {
                result.set(i, j, col.get(i).clone());
            }
        }
        result
    }

    /// Number of rows.
    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(rows, cols)`.
    #[must_use]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Whether the matrix is square.
    #[must_use]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at row `i`, column `j` (0-based).
    ///
    /// # Panics
    ///
    /// Panics if the position is out of bounds.
    #[must_use]
    #[track_caller]
    pub fn get(&self, i: usize, j: usize) -> &S {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }

    /// Replaces the entry at row `i`, column `j` (0-based).
    ///
    /// # Panics
    ///
    /// Panics if the position is out of bounds.
    #[track_caller]
    pub fn set(&mut self, i: usize, j: usize, value: S) {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        self.data[i * self.cols + j] = value;
    }

    /// Column `j` as a vector.
    ///
    /// # Panics
    ///
    /// Panics if `j` is out of bounds.
    #[must_use]
    #[track_caller]
    pub fn column(&self, j: usize) -> Vector<S> {
        assert!(j < self.cols, "column index out of bounds");
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    /// All columns, left to right.
    #[must_use]
    pub fn columns(&self) -> Vec<Vector<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// The rectangular block with rows `r0..r1` and columns `c0..c1`
    /// (half-open ranges).
    ///
    /// # Panics
    ///
    /// Panics if the ranges are empty or out of bounds.
    #[must_use]
    #[track_caller]
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        assert!(r0 < r1 && r1 <= self.rows, "row range out of bounds");
        assert!(c0 < c1 && c1 <= self.cols, "column range out of bounds");
        let mut data = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for i in r0..r1 {
            for j in c0..c1 {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix::new(r1 - r0, c1 - c0, data)
    }

    /// The principal submatrix on the given (distinct, in-bounds) indices.
    ///
    /// # Panics
    ///
    /// Panics if `indices` is empty or contains an out-of-bounds index.
    #[must_use]
    #[track_caller]
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        assert!(!indices.is_empty(), "index list must be non-empty");
        let mut data = Vec::with_capacity(indices.len() * indices.len());
        for &i in indices {
            for &j in indices {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix::new(indices.len(), indices.len(), data)
    }

    /// Plain transpose (no inversion).
    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut result = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                result.set(j, i, self.get(i, j).clone());
            }
        }
        result
    }

    /// Whether every entry is 𝟘.
    #[must_use]
    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Semifield::is_zero)
    }

    /// Matrix-vector product A ⊗ x.
    ///
    /// # Errors
    ///
    /// Fails with [`Error::ShapeMismatch`] if `x.dim() != self.cols()`.
    pub fn mul_vector(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if x.dim() != self.cols {
            return Err(Error::ShapeMismatch {
                op: "mul_vector",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: x.dim(),
                rhs_cols: 1,
            });
        }
        let mut data = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = S::zero();
            for j in 0..self.cols {
                acc = acc.add(&self.get(i, j).mul(x.get(j)));
            }
            data.push(acc);
        }
        Ok(Vector::new(data))
    }
}

impl<S: Semifield> Vector<S> {
    /// Builds a vector.
    ///
    /// # Panics
    ///
    /// Panics if `data` is empty.
    #[must_use]
    #[track_caller]
    pub fn new(data: Vec<S>) -> Self {
        assert!(!data.is_empty(), "vector must have at least one entry");
        Vector { data }
    }

    /// The all-𝟘 vector.
    ///
    /// # Panics
    ///
    /// Panics if `dim` is zero.
    #[must_use]
    #[track_caller]
    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "vector must have at least one entry");
        Vector {
            data: vec![S::zero(); dim],
        }
    }

    /// Number of entries.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.data.len()
    }

    /// Entry `i` (0-based).
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of bounds.
    #[must_use]
    #[track_caller]
    pub fn get(&self, i: usize) -> &S {
        &self.data[i]
    }

    /// Replaces entry `i` (0-based).
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of bounds.
    #[track_caller]
    pub fn set(&mut self, i: usize, value: S) {
        self.data[i] = value;
    }

    /// Iterates over the entries in order.
    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.data.iter()
    }

    /// Whether every entry is 𝟘.
    #[must_use]
    pub fn is_zero_vector(&self) -> bool {
        self.data.iter().all(Semifield::is_zero)
    }

    /// Whether every entry is finite (no 𝟘 anywhere).
    #[must_use]
    pub fn is_regular(&self) -> bool {
        !self.data.iter().any(Semifield::is_zero)
    }

    /// This vector as an n×1 matrix.
    #[must_use]
    pub fn as_column(&self) -> Matrix<S> {
        Matrix::new(self.dim(), 1, self.data.clone())
    }

    /// Entrywise ⊕ of two vectors.
    ///
    /// # Errors
    ///
    /// Fails with [`Error::ShapeMismatch`] on differing dimensions.
    pub fn add(&self, rhs: &Vector<S>) -> Result<Vector<S>> {
        if self.dim() != rhs.dim() {
            return Err(Error::ShapeMismatch {
                op: "vector add",
                lhs_rows: self.dim(),
                lhs_cols: 1,
                rhs_rows: rhs.dim(),
                rhs_cols: 1,
            });
        }
        Ok(Vector::new(
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        ))
    }

    /// Scales every entry by `x` (⊗ on each entry).
    #[must_use]
    pub fn scale(&self, x: &S) -> Vector<S> {
        Vector::new(self.data.iter().map(|v| x.mul(v)).collect())
    }

    /// Whether `self ≤ rhs` entrywise in the canonical order.
    ///
    /// # Errors
    ///
    /// Fails with [`Error::ShapeMismatch`] on differing dimensions.
    pub fn le(&self, rhs: &Vector<S>) -> Result<bool> {
        if self.dim() != rhs.dim() {
            return Err(Error::ShapeMismatch {
                op: "vector le",
                lhs_rows: self.dim(),
                lhs_cols: 1,
                rhs_rows: rhs.dim(),
                rhs_cols: 1,
            });
        }
        Ok(self.data.iter().zip(&rhs.data).all(|(a, b)| a.le(b)))
    }
}

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

/// Entrywise ⊕ of two equally shaped matrices.
///
/// # Errors
///
/// Fails with [`Error::ShapeMismatch`] on differing shapes.
pub fn mat_add<S: Semifield>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op: "mat_add",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.rows(),
            rhs_cols: b.cols(),
        });
    }
    Ok(Matrix::new(
        a.rows(),
        a.cols(),
        a.data.iter().zip(&b.data).map(|(x, y)| x.add(y)).collect(),
    ))
}

/// The ⊕/⊗ matrix product: (A ⊗ B)ᵢⱼ = ⊕ₖ aᵢₖ ⊗ bₖⱼ.
///
/// # Errors
///
/// Fails with [`Error::ShapeMismatch`] unless `a.cols() == b.rows()`.
pub fn mat_mul<S: Semifield>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>> {
    if a.cols() != b.rows() {
        return Err(Error::ShapeMismatch {
            op: "mat_mul",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.rows(),
            rhs_cols: b.cols(),
        });
    }
    let mut result: Matrix<S> = Matrix::zero(a.rows(), b.cols());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let aik = a.get(i, k);
            if aik.is_zero() {
                continue;
            }
            for j in 0..b.cols() {
                let term = aik.mul(b.get(k, j));
                let merged = result.get(i, j).add(&term);
                result.set(i, j, merged);
            }
        }
    }
    Ok(result)
}

/// Scales every entry of `a` by the scalar `x`.
#[must_use]
pub fn scalar_mul<S: Semifield>(x: &S, a: &Matrix<S>) -> Matrix<S> {
    Matrix::new(
        a.rows(),
        a.cols(),
        a.data.iter().map(|v| x.mul(v)).collect(),
    )
}

/// The conjugate transpose A⁻: entry (i, j) is inv(a_ji) when a_ji ≠ 𝟘 and 𝟘
/// otherwise.
///
/// # Errors
///
/// Fails with [`Error::AllBottomMatrix`] when every entry of `a` is 𝟘 (the
/// conjugate of the zero matrix is not defined).
pub fn conjugate_transpose<S: Semifield>(a: &Matrix<S>) -> Result<Matrix<S>> {
    if a.is_zero_matrix() {
        return Err(Error::AllBottomMatrix {
            op: "conjugate_transpose",
        });
    }
    let mut result = Matrix::zero(a.cols(), a.rows());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let entry = a.get(i, j);
            if !entry.is_zero() {
                result.set(j, i, entry.inv().expect("finite entry inverts"));
            }
        }
    }
    Ok(result)
}

/// The trace tr A = ⊕ᵢ aᵢᵢ.
///
/// # Errors
///
/// Fails with [`Error::NotSquare`] on non-square input.
pub fn trace<S: Semifield>(a: &Matrix<S>) -> Result<S> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op: "trace",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut acc = S::zero();
    for i in 0..a.rows() {
        acc = acc.add(a.get(i, i));
    }
    Ok(acc)
}

/// The cycle bound Tr A = tr A ⊕ tr A² ⊕ ⋯ ⊕ tr Aⁿ.
///
/// Tr A ≤ 𝟙 holds exactly when every cycle of the weighted digraph of `A` has
/// weight at most 𝟙, which is the precondition of the closures.
///
/// # Errors
///
/// Fails with [`Error::NotSquare`] on non-square input.
pub fn big_tr<S: Semifield>(a: &Matrix<S>) -> Result<S> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op: "big_tr",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut acc = S::zero();
    let mut power = a.clone();
    for m in 1..=n {
        acc = acc.add(&trace(&power)?);
        if m < n {
            power = mat_mul(&power, a)?;
        }
    }
    Ok(acc)
}

/// Accumulates Tr A with early exit: returns the accumulated value up to and
/// including the first power whose partial sum exceeds 𝟙, together with a
/// flag that is `true` when the full accumulation stayed ≤ 𝟙.
///
/// For matrices with Tr A ≤ 𝟙 the returned value is exactly [`big_tr`]; for
/// the rest it is the offending partial accumulation, which is the value the
/// closure operators carry in their divergence error and the value recorded
/// in candidate logs.
///
/// # Errors
///
/// Fails with [`Error::NotSquare`] on non-square input.
pub fn big_tr_bounded<S: Semifield>(a: &Matrix<S>) -> Result<(S, bool)> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op: "big_tr",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let one = S::one();
    let mut acc = S::zero();
    let mut power = a.clone();
    for m in 1..=n {
        acc = acc.add(&trace(&power)?);
        if !acc.le(&one) {
            return Ok((acc, false));
        }
        if m < n {
            power = mat_mul(&power, a)?;
        }
    }
    Ok((acc, true))
}

/// The Kleene star A* = I ⊕ A ⊕ A² ⊕ ⋯ ⊕ Aⁿ⁻¹, evaluated by Horner's scheme
/// in n−1 matrix products.
///
/// # Errors
///
/// * [`Error::NotSquare`] on non-square input;
/// * [`Error::StarDiverges`] when Tr A > 𝟙, carrying the offending
///   accumulated trace.
pub fn star<S: Semifield>(a: &Matrix<S>) -> Result<Matrix<S>> {
    let (tr, within_unit) = big_tr_bounded(a)?;
    if !within_unit {
        return Err(Error::StarDiverges {
            trace: convert_trace(tr),
        });
    }
    let n = a.rows();
    let identity = Matrix::identity(n);
    let mut result = identity.clone();
    for _ in 1..n {
        result = mat_add(&identity, &mat_mul(a, &result)?)?;
    }
    Ok(result)
}

/// The transitive closure A⁺ = A ⊕ A² ⊕ ⋯ ⊕ Aⁿ = A ⊗ A*.
///
/// # Errors
///
/// Same as [`star`].
pub fn plus<S: Semifield>(a: &Matrix<S>) -> Result<Matrix<S>> {
    mat_mul(a, &star(a)?)
}

/// The fixpoint generator A^×: the columns j of A⁺ with (A⁺)ⱼⱼ = 𝟙, in
/// ascending column order, duplicates kept. Its column span is the solution
/// set of A ⊗ x ≤ x restricted to the span of A⁺.
///
/// # Errors
///
/// * [`Error::NotSquare`] / [`Error::StarDiverges`] as for [`star`];
/// * [`Error::NoUnitDiagonalColumn`] when no column qualifies (possible when
///   Tr A < 𝟙, e.g. for the 1×1 zero matrix).
pub fn times_operator<S: Semifield>(a: &Matrix<S>) -> Result<Matrix<S>> {
    let closure = plus(a)?;
    let one = S::one();
    let columns: Vec<Vector<S>> = (0..closure.cols())
        .filter(|&j| *closure.get(j, j) == one)
        .map(|j| closure.column(j))
        .collect();
    if columns.is_empty() {
        return Err(Error::NoUnitDiagonalColumn);
    }
    Ok(Matrix::from_columns(&columns))
}

/// Whether every row has at least one non-𝟘 entry.
#[must_use]
pub fn is_row_regular<S: Semifield>(a: &Matrix<S>) -> bool {
    (0..a.rows()).all(|i| (0..a.cols()).any(|j| !a.get(i, j).is_zero()))
}

/// Whether every column has at least one non-𝟘 entry.
#[must_use]
pub fn is_column_regular<S: Semifield>(a: &Matrix<S>) -> bool {
    (0..a.cols()).all(|j| (0..a.rows()).any(|i| !a.get(i, j).is_zero()))
}

/// The 1-based index of the first all-𝟘 row, if any.
#[must_use]
pub fn first_zero_row<S: Semifield>(a: &Matrix<S>) -> Option<usize> {
    (0..a.rows()).find(|&i| (0..a.cols()).all(|j| a.get(i, j).is_zero())).map(|i| i + 1)
}

/// Whether `a ≤ b` entrywise in the canonical order.
///
/// # Errors
///
/// Fails with [`Error::ShapeMismatch`] on differing shapes.
pub fn entrywise_le<S: Semifield>(a: &Matrix<S>, b: &Matrix<S>) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op: "entrywise_le",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.rows(),
            rhs_cols: b.cols(),
        });
    }
    Ok(a.data.iter().zip(&b.data).all(|(x, y)| x.le(y)))
}

/// Converts a trace value of any instance into the reporting scalar type.
///
/// Divergence errors carry a [`TropScalar`]; for the canonical instance this
/// is the identity, for other instances the value is reported as the unit
/// (the exact offending value is instance-specific and not representable).
fn convert_trace<S: Semifield>(tr: S) -> TropScalar {
    let any: &dyn std::any::Any = &tr;
    match any.downcast_ref::<TropScalar>() {
        Some(value) => value.clone(),
        None => TropScalar::one(),
    }
}

impl fmt::Display for TropMatrix {
    /// Rows on separate lines, entries separated by single spaces, in the
    /// scalar token syntax. This is the body format of matrix files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.cols() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for TropVector {
    /// Entries separated by single spaces, in the scalar token syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, value) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{value}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
