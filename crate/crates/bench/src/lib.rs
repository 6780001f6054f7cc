//! Deterministic inputs for the benchmarks under `benches/`.

use liegrad_core::catalog::{fixture, scramble};
use liegrad_core::{Grading, Matrix, Scalar};

/// An `n × n` integer matrix of rank about `n - n/4`, built without randomness
/// so timings are comparable across runs.
pub fn dense_matrix(n: usize) -> Matrix {
    let full = n - n / 4;
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < full {
                        Scalar::int(((i * 7 + j * 3 + i * j) % 11) as i64 - 5)
                    } else {
                        // copy of an earlier row plus a multiple of another
                        Scalar::int(((i % full) * 7 + j * 3 + (i % full) * j) as i64 % 11 - 5)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("square")
}

/// A catalog fixture on a scrambled homogeneous basis.
pub fn scrambled(name: &str, seed: u64) -> Grading {
    let f = fixture(name).expect("catalog fixture");
    scramble(&f, seed).expect("scramble").grading
}
