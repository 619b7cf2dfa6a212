//! Exact max-plus (tropical) linear algebra and optimization.
//!
//! The crate works in the semifield (ℝ ∪ {−∞}, ⊕ = max, ⊗ = +) with exact
//! rational entries and computes, for an arbitrary square matrix A:
//!
//! * spectral data — the radius, irreducibility, block-triangular normal
//!   form, and eigenvectors ([`spectral`]);
//! * Kleene closures, conjugates, and fixpoint generators ([`linalg`]);
//! * solution sets of one-sided systems and fixpoint inequalities
//!   ([`systems`]);
//! * the complete solution sets of the pseudoquadratic problems
//!   minimize (A ⊗ x)⁻ ⊗ x and minimize x⁻ ⊗ A ⊗ x ⊕ (A ⊗ x)⁻ ⊗ x over
//!   regular vectors, by sparsification and closure pooling ([`sparsifier`],
//!   [`optimizer`]);
//! * independent brute-force baselines for cross-checking ([`oracle`]).
//!
//! Everything is exact: scalars are arbitrary-precision rationals plus the
//! bottom element −∞, and all comparisons in results are bit-exact.

pub mod error;
pub mod linalg;
pub mod semifield;
pub mod optimizer;
pub mod oracle;
pub mod sparsifier;
pub mod spectral;
pub mod systems;

pub use error::{Error, Result};
pub use linalg::{Matrix, TropMatrix, TropVector, Vector};
pub use optimizer::{ProblemKind, SolutionSet};
pub use oracle::GridSpec;
pub use semifield::{MinPlusScalar, Semifield, TropScalar};
pub use sparsifier::SparseCandidate;
pub use spectral::{NormalForm, Spectrum};
pub use systems::{EquationSolution, SolutionKind};
