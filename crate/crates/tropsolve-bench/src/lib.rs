//! Shared instance generators for the criterion benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropsolve_core::{Matrix, TropMatrix, TropScalar};

/// Deterministically generates a dense n×n max-plus matrix with integer
/// entries in `−bound..=bound` and roughly `bottom_pct` percent −∞ entries,
/// resampling any all-−∞ row so the matrix stays row-regular.
#[must_use]
pub fn random_matrix(seed: u64, n: usize, bound: i64, bottom_pct: u32) -> TropMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<TropScalar>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row: Vec<TropScalar>;
        loop {
            row = (0..n)
                .map(|_| {
                    if rng.gen_range(0..100) < bottom_pct {
                        TropScalar::bottom()
                    } else {
                        TropScalar::from_int(rng.gen_range(-bound..=bound))
                    }
                })
                .collect();
            if row.iter().any(|v| !v.is_bottom()) {
                break;
            }
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}
