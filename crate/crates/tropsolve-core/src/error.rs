//! Error type shared by every layer of the toolkit.
//!
//! Variants are grouped by the layer that raises them: scalar arithmetic,
//! matrix algebra, spectral analysis, equation solving, sparsified
//! enumeration, and the brute-force oracle. The command-line front end maps
//! them onto process exit codes (input problems, hypothesis violations,
//! internal inconsistencies), so the variants stay fine-grained and carry the
//! offending values where that helps diagnosis.
//!
//! All indices stored in error variants are 1-based, matching the row/column
//! numbering used in rendered output.

use num::BigRational;
use thiserror::Error;

use crate::semifield::TropScalar;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Multiplicative inversion of the zero element −∞.
    #[error("the zero element -inf has no multiplicative inverse")]
    BottomInverse,

    /// `pow` of the zero element with a non-positive exponent.
    #[error("raising -inf to the non-positive power {exponent} is undefined")]
    BottomPower {
        /// The offending exponent.
        exponent: BigRational,
    },

    /// A scalar token failed to parse.
    #[error("invalid scalar token `{token}` (expected an integer, a fraction p/q, or -inf)")]
    InvalidScalar {
        /// The rejected token, verbatim.
        token: String,
    },

    /// Two operands had non-conforming shapes.
    #[error("{op}: shape mismatch between {lhs_rows}x{lhs_cols} and {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        /// Operation that was attempted.
        op: &'static str,
        /// Rows of the left operand.
        lhs_rows: usize,
        /// Columns of the left operand.
        lhs_cols: usize,
        /// Rows of the right operand.
        rhs_rows: usize,
        /// Columns of the right operand.
        rhs_cols: usize,
    },

    /// A square matrix was required.
    #[error("{op}: requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        /// Operation that was attempted.
        op: &'static str,
        /// Rows of the operand.
        rows: usize,
        /// Columns of the operand.
        cols: usize,
    },

    /// The operation rejects matrices that are entirely −∞.
    #[error("{op}: the matrix must contain at least one finite entry")]
    AllBottomMatrix {
        /// Operation that was attempted.
        op: &'static str,
    },

    /// The operation rejects vectors that are entirely −∞.
    #[error("{op}: the vector must contain at least one finite entry")]
    ZeroVector {
        /// Operation that was attempted.
        op: &'static str,
    },

    /// A fully finite vector was required.
    #[error("vector entry {index} is -inf but a fully finite vector is required")]
    IrregularVector {
        /// 1-based index of the first −∞ entry.
        index: usize,
    },

    /// A matrix closure (star/plus) diverges because some cycle has positive
    /// weight. Carries the accumulated trace value that exceeded the unit.
    #[error("closure diverges: accumulated trace {trace} exceeds the unit 0")]
    StarDiverges {
        /// Accumulated trace up to and including the first violating power.
        trace: TropScalar,
    },

    /// No column of the plus-closure carries a unit diagonal entry, so the
    /// fixpoint generator is empty.
    #[error("the plus-closure has no column with a unit diagonal entry")]
    NoUnitDiagonalColumn,

    /// The operation requires an irreducible matrix.
    #[error("operation requires an irreducible matrix")]
    ReducibleMatrix,

    /// A row without finite entries where row-regularity is required.
    #[error("row {row} of the matrix has no finite entry")]
    ZeroRow {
        /// 1-based row index.
        row: usize,
    },

    /// A column without finite entries where column-regularity is required.
    #[error("column {col} of the matrix has no finite entry")]
    ZeroColumn {
        /// 1-based column index.
        col: usize,
    },

    /// The leading block eigenvalue is −∞ (the matrix has an isolated zero
    /// sink block), so the optimization problems are unbounded/undefined.
    #[error("leading block eigenvalue is -inf: the matrix has a zero sink block")]
    BottomLeadingEigenvalue,

    /// The spectral radius is −∞ (no finite cycle at all).
    #[error("spectral radius is -inf: the matrix has no finite cycle")]
    BottomSpectralRadius,

    /// The composite enumeration level must be at least the unit.
    #[error("composite level {level} is below the unit 0")]
    LevelBelowUnit {
        /// The offending level.
        level: TropScalar,
    },

    /// A block eigenvalue lies below the leading one where the block-diagonal
    /// closed form requires all of them to dominate it.
    #[error("block {block} has eigenvalue {value}, below the leading eigenvalue {leading}")]
    EigenvalueBelowLeading {
        /// 1-based block index in normal-form order.
        block: usize,
        /// The block's eigenvalue.
        value: TropScalar,
        /// The leading eigenvalue it must dominate.
        leading: TropScalar,
    },

    /// A block eigenvalue differs from the unit where the fixed-point closed
    /// form requires every block eigenvalue to be exactly 0.
    #[error("block {block} has eigenvalue {value}, but the unit 0 is required")]
    NonUnitEigenvalue {
        /// 1-based block index in normal-form order.
        block: usize,
        /// The block's eigenvalue.
        value: TropScalar,
    },

    /// Enumeration produced no accepted candidate although the solver
    /// hypotheses hold; this indicates an internal inconsistency.
    #[error("no sparsified candidate was accepted although the hypotheses hold")]
    NoAcceptedCandidates,

    /// A brute-force oracle refused to run because the workload exceeds its cap.
    #[error("{op}: workload of {needed} exceeds the cap of {cap}")]
    CapExceeded {
        /// Operation that was attempted.
        op: &'static str,
        /// Required work, as a decimal string (may exceed `u64`).
        needed: String,
        /// The configured cap.
        cap: u64,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn messages_render_offending_values() {
        let err = Error::StarDiverges {
            trace: TropScalar::from_int(2),
        };
        assert_eq!(
            err.to_string(),
            "closure diverges: accumulated trace 2 exceeds the unit 0"
        );

        let err = Error::CapExceeded {
            op: "grid_minimum",
            needed: "16777216".to_owned(),
            cap: 1_000_000,
        };
        assert!(err.to_string().contains("16777216"));
        assert!(err.to_string().contains("1000000"));
    }

    #[test]
    fn errors_compare_structurally() {
        assert_eq!(Error::BottomInverse, Error::BottomInverse);
        assert_ne!(
            Error::ZeroRow { row: 1 },
            Error::ZeroRow { row: 2 },
            "carried indices take part in equality",
        );
    }
}
