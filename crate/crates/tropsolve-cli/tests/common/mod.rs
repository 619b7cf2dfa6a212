//! Shared fixtures for the integration suites: the worked 3×3 instance and a
//! deterministic corpus of random row-regular max-plus matrices.

#![allow(dead_code)]

use std::sync::OnceLock;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropsolve_core::{Matrix, TropMatrix, TropScalar, TropVector, Vector};

/// Seed for every deterministic corpus in the suites.
pub const CORPUS_SEED: u64 = 0x0520_26_08;

/// Number of random instances in the shared corpus.
pub const CORPUS_SIZE: usize = 500;

/// A finite integer scalar.
pub fn fin(value: i64) -> TropScalar {
    TropScalar::from_int(value)
}

/// A finite rational scalar.
pub fn fin_ratio(num: i64, den: i64) -> TropScalar {
    TropScalar::ratio(num, den)
}

/// The −∞ scalar.
pub fn bot() -> TropScalar {
    TropScalar::bottom()
}

/// The worked 3×3 instance used throughout the documentation:
/// [[1, −∞, −∞], [3, 2, −∞], [−∞, 0, −1]].
pub fn example_matrix() -> TropMatrix {
    Matrix::from_rows(vec![
        vec![fin(1), bot(), bot()],
        vec![fin(3), fin(2), bot()],
        vec![bot(), fin(0), fin(-1)],
    ])
}

/// One random n×n matrix: integer entries in −5..=5, each entry −∞ with
/// probability 40%, and any all-−∞ row resampled so the result stays
/// row-regular.
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> TropMatrix {
    let mut rows: Vec<Vec<TropScalar>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row: Vec<TropScalar>;
        loop {
            row = (0..n)
                .map(|_| {
                    if rng.gen_range(0..100) < 40 {
                        bot()
                    } else {
                        fin(rng.gen_range(-5..=5))
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

/// One random regular vector with integer entries in −5..=5.
pub fn random_regular_vector(rng: &mut ChaCha8Rng, n: usize) -> TropVector {
    Vector::new((0..n).map(|_| fin(rng.gen_range(-5..=5))).collect())
}

/// The shared 500-instance corpus: sizes cycle through 2, 3, 4, 5.
pub fn corpus() -> &'static [TropMatrix] {
    static CORPUS: OnceLock<Vec<TropMatrix>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
        (0..CORPUS_SIZE)
            .map(|k| random_matrix(&mut rng, 2 + k % 4))
            .collect()
    })
}

/// A fresh deterministic generator for per-test auxiliary randomness,
/// decoupled from the corpus stream by a caller-chosen salt.
pub fn salted_rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ salt)
}
