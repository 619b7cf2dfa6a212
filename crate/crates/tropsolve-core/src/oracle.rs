//! Independent brute-force reference implementations.
//!
//! The solvers in [`crate::optimizer`] rest on closed-form constructions;
//! this module cross-checks them by doing the obvious expensive thing
//! instead. [`grid_minimum`] scores every vector of a finite rational grid
//! with its own arithmetic (no semifield operators involved),
//! [`exhaustive_candidates`] walks the full cartesian selection space without
//! any pruning machinery, and [`cycle_mean_radius`] recovers the spectral
//! radius by enumerating elementary cycles rather than through trace powers.
//!
//! Every search is capped and **refuses** to run past its cap — a truncated
//! verification would be worse than none.

use num::{BigInt, BigRational, BigUint};

use crate::error::{Error, Result};
use crate::linalg::{
    big_tr_bounded, conjugate_transpose, first_zero_row, mat_add, mat_mul, scalar_mul, Matrix,
    TropMatrix, TropVector, Vector,
};
use crate::optimizer::ProblemKind;
use crate::semifield::{Semifield, TropScalar};
use crate::sparsifier::SparseCandidate;

/// Default ceiling on the number of grid points scored by [`grid_minimum`].
pub const DEFAULT_GRID_CAP: u64 = 1_000_000;

/// Default ceiling on the number of selections visited by
/// [`exhaustive_candidates`].
pub const DEFAULT_CANDIDATE_CAP: u64 = 10_000;

/// Ceiling on arc traversals during the elementary-cycle search.
const CYCLE_EXTENSION_CAP: u64 = 1_000_000;

// ---------------------------------------------------------------------------
// Grid specification
// ---------------------------------------------------------------------------

/// A uniform rational grid: every coordinate independently ranges over
/// lo, lo + step, lo + 2·step, … up to hi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    /// Least value of each coordinate.
    pub lo: BigRational,
    /// Greatest value a coordinate may reach (inclusive when hit exactly).
    pub hi: BigRational,
    /// Positive increment between consecutive values.
    pub step: BigRational,
}

impl GridSpec {
    /// Creates a grid specification.
    ///
    /// # Panics
    ///
    /// Panics if `lo > hi` or `step ≤ 0`; callers validate user input before
    /// constructing the grid.
    #[must_use]
    #[track_caller]
    pub fn new(lo: BigRational, hi: BigRational, step: BigRational) -> Self {
        assert!(lo <= hi, "grid bounds must satisfy lo <= hi");
        assert!(step > BigRational::from_integer(BigInt::from(0)), "grid step must be positive");
        GridSpec { lo, hi, step }
    }

    /// Number of values on one axis: ⌊(hi − lo) / step⌋ + 1.
    #[must_use]
    pub fn points_per_axis(&self) -> BigUint {
        let span = (&self.hi - &self.lo) / &self.step;
        span.floor()
            .to_integer()
            .to_biguint()
            .expect("lo <= hi keeps the span non-negative")
            + BigUint::from(1u8)
    }

    fn axis_values(&self) -> Vec<BigRational> {
        let mut values = Vec::new();
        let mut current = self.lo.clone();
        while current <= self.hi {
            values.push(current.clone());
            current += &self.step;
        }
        values
    }
}

// ---------------------------------------------------------------------------
// Grid search
// ---------------------------------------------------------------------------

/// Scores every grid vector against the objective of `kind` and returns the
/// least value together with the first vector attaining it (grid points are
/// visited lexicographically, the last coordinate varying fastest).
///
/// The returned value bounds the true minimum from above; it matches exactly
/// whenever some optimum lies on the grid. The evaluation is hand-rolled
/// rational arithmetic, deliberately independent of the semifield operators.
///
/// # Errors
///
/// [`Error::NotSquare`] for rectangular input, [`Error::ZeroRow`] when a row
/// has no finite entry (the objective is undefined over regular vectors),
/// and [`Error::CapExceeded`] when the grid holds more than `cap` points.
pub fn grid_minimum(
    kind: ProblemKind,
    a: &TropMatrix,
    grid: &GridSpec,
    cap: u64,
) -> Result<(TropScalar, TropVector)> {
    check_square(a, "grid_minimum")?;
    if let Some(row) = first_zero_row(a) {
        return Err(Error::ZeroRow { row });
    }
    let n = a.rows();
    let total = grid.points_per_axis().pow(n as u32);
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            op: "grid_minimum",
            needed: total.to_string(),
            cap,
        });
    }

    let weights = rational_weights(a);
    let axis = grid.axis_values();
    let mut index = vec![0usize; n];
    let mut x: Vec<BigRational> = vec![axis[0].clone(); n];
    let mut best: Option<(BigRational, Vec<BigRational>)> = None;
    loop {
        let value = grid_objective(kind, &weights, &x);
        let improved = match &best {
            None => true,
            Some((incumbent, _)) => value < *incumbent,
        };
        if improved {
            best = Some((value, x.clone()));
        }
        // Advance the odometer, last coordinate fastest.
        let mut row = n;
        loop {
            if row == 0 {
                let (value, argmin) = best.expect("the grid holds at least one point");
                return Ok((
                    TropScalar::finite(value),
                    Vector::new(argmin.into_iter().map(TropScalar::finite).collect()),
                ));
            }
            row -= 1;
            index[row] += 1;
            if index[row] < axis.len() {
                x[row] = axis[index[row]].clone();
                break;
            }
            index[row] = 0;
            x[row] = axis[0].clone();
        }
    }
}

fn rational_weights(a: &TropMatrix) -> Vec<Vec<Option<BigRational>>> {
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| a.get(i, j).as_finite().cloned())
                .collect()
        })
        .collect()
}

fn grid_objective(
    kind: ProblemKind,
    weights: &[Vec<Option<BigRational>>],
    x: &[BigRational],
) -> BigRational {
    let mut backward: Option<BigRational> = None; // max_i (x_i − y_i)
    let mut forward: Option<BigRational> = None; // max_i (y_i − x_i)
    for (i, row) in weights.iter().enumerate() {
        let mut y_i: Option<BigRational> = None;
        for (j, w) in row.iter().enumerate() {
            if let Some(w) = w {
                let reach = w + &x[j];
                if y_i.as_ref().is_none_or(|cur| reach > *cur) {
                    y_i = Some(reach);
                }
            }
        }
        let y_i = y_i.expect("row-regularity was validated");
        let back = &x[i] - &y_i;
        if backward.as_ref().is_none_or(|cur| back > *cur) {
            backward = Some(back);
        }
        let fwd = &y_i - &x[i];
        if forward.as_ref().is_none_or(|cur| fwd > *cur) {
            forward = Some(fwd);
        }
    }
    let backward = backward.expect("matrices are never empty");
    match kind {
        ProblemKind::Component => backward,
        ProblemKind::Composite => backward.max(forward.expect("matrices are never empty")),
    }
}

// ---------------------------------------------------------------------------
// Exhaustive sparsification
// ---------------------------------------------------------------------------

/// Visits the full cartesian space of one-finite-entry-per-row selections —
/// no pruning, no pre-reduction — and scores each candidate exactly like the
/// production enumeration does: the companion matrix at `level` (λ₁ for the
/// component problem, μ for the composite one) and the bounded-trace
/// acceptance test.
///
/// # Errors
///
/// [`Error::NotSquare`] and [`Error::ZeroRow`] on malformed input,
/// [`Error::BottomLeadingEigenvalue`] / [`Error::LevelBelowUnit`] when the
/// level is out of range for `kind`, and [`Error::CapExceeded`] when the
/// selection space holds more than `cap` candidates.
pub fn exhaustive_candidates(
    a: &TropMatrix,
    kind: ProblemKind,
    level: &TropScalar,
    cap: u64,
) -> Result<Vec<SparseCandidate>> {
    check_square(a, "exhaustive_candidates")?;
    if let Some(row) = first_zero_row(a) {
        return Err(Error::ZeroRow { row });
    }
    match kind {
        ProblemKind::Component => {
            if level.is_zero() {
                return Err(Error::BottomLeadingEigenvalue);
            }
        }
        ProblemKind::Composite => {
            if level.lt(&TropScalar::one()) {
                return Err(Error::LevelBelowUnit {
                    level: level.clone(),
                });
            }
        }
    }

    let n = a.rows();
    let choices: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| !a.get(i, j).is_zero()).collect())
        .collect();
    let total: BigUint = choices
        .iter()
        .map(|row| BigUint::from(row.len()))
        .product();
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            op: "exhaustive_candidates",
            needed: total.to_string(),
            cap,
        });
    }

    let shifted = match kind {
        ProblemKind::Component => Some(mat_add(
            a,
            &scalar_mul(level, &Matrix::identity(n)),
        )?),
        ProblemKind::Composite => None,
    };

    let mut out = Vec::new();
    let mut index = vec![0usize; n];
    loop {
        let selection: Vec<usize> = index.iter().zip(&choices).map(|(&k, row)| row[k]).collect();
        let mut a_k: TropMatrix = Matrix::zero(n, n);
        for (i, &j) in selection.iter().enumerate() {
            a_k.set(i, j, a.get(i, j).clone());
        }
        let conj = conjugate_transpose(&a_k)?;
        let b_k = match (&shifted, kind) {
            (Some(shifted), _) => mat_mul(&conj, shifted)?,
            (None, _) => mat_add(
                &mat_mul(&conj, a)?,
                &scalar_mul(&level.inv()?, &mat_add(&conj, a)?),
            )?,
        };
        let (tr_b_k, accepted) = big_tr_bounded(&b_k)?;
        out.push(SparseCandidate {
            selection,
            a_k,
            b_k,
            tr_b_k,
            accepted,
        });

        let mut row = n;
        loop {
            if row == 0 {
                return Ok(out);
            }
            row -= 1;
            index[row] += 1;
            if index[row] < choices[row].len() {
                break;
            }
            index[row] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Cycle-mean radius
// ---------------------------------------------------------------------------

/// The maximum over elementary cycles of (cycle weight)/(cycle length),
/// found by depth-first search from each start node with intermediate nodes
/// restricted to larger indices — every elementary cycle is visited exactly
/// once, from its smallest node. Returns −∞ for an acyclic arc pattern.
///
/// This must agree with the trace-formula spectral radius on every square
/// matrix; it is the cross-check, not the production path.
///
/// # Errors
///
/// [`Error::NotSquare`] for rectangular input and [`Error::CapExceeded`]
/// when the search would exceed its internal arc-traversal budget.
pub fn cycle_mean_radius(a: &TropMatrix) -> Result<TropScalar> {
    check_square(a, "cycle_mean_radius")?;
    let mut scan = CycleScan {
        weights: rational_weights(a),
        on_path: vec![false; a.rows()],
        budget: CYCLE_EXTENSION_CAP,
        best: None,
    };
    let zero = BigRational::from_integer(BigInt::from(0));
    for start in 0..a.rows() {
        scan.on_path[start] = true;
        scan.extend(start, start, &zero, 0)?;
        scan.on_path[start] = false;
    }
    Ok(match scan.best {
        Some(mean) => TropScalar::finite(mean),
        None => TropScalar::bottom(),
    })
}

struct CycleScan {
    weights: Vec<Vec<Option<BigRational>>>,
    on_path: Vec<bool>,
    budget: u64,
    best: Option<BigRational>,
}

impl CycleScan {
    /// Extends the current path ending at `node` by every admissible arc;
    /// `edges` arcs lie on the path already.
    fn extend(
        &mut self,
        start: usize,
        node: usize,
        weight: &BigRational,
        edges: usize,
    ) -> Result<()> {
        for next in 0..self.weights.len() {
            let Some(arc) = self.weights[node][next].clone() else {
                continue;
            };
            if next != start && (next < start || self.on_path[next]) {
                continue;
            }
            if self.budget == 0 {
                return Err(Error::CapExceeded {
                    op: "cycle_mean_radius",
                    needed: format!("more than {CYCLE_EXTENSION_CAP} arc traversals"),
                    cap: CYCLE_EXTENSION_CAP,
                });
            }
            self.budget -= 1;
            let total = weight + arc;
            if next == start {
                let length = BigRational::from_integer(BigInt::from(edges as u64 + 1));
                let mean = total / length;
                if self.best.as_ref().is_none_or(|cur| mean > *cur) {
                    self.best = Some(mean);
                }
            } else {
                self.on_path[next] = true;
                self.extend(start, next, &total, edges + 1)?;
                self.on_path[next] = false;
            }
        }
        Ok(())
    }
}

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

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
