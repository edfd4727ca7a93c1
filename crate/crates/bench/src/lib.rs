//! Inputs shared by the benchmarks.

use kdual_core::IntegerMatrix;

/// A dense `rows × cols` integer matrix with small, deterministic entries.
pub fn dense_matrix(rows: usize, cols: usize) -> IntegerMatrix {
    let entries: Vec<Vec<i64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| ((i * 7 + j * 13 + i * j * 3) % 11) as i64 - 5)
                .collect()
        })
        .collect();
    IntegerMatrix::from_rows(&entries)
}

/// Products to normalize in the torus ring.
pub const TORUS_PRODUCTS: [&str; 3] = [
    "(1 + sigma*chi1 + chi2)^3",
    "(t*chi1*chi2 - sigma)^2*(chi1 + chi2)",
    "(1 - t)*(sigma*chi1 + t*chi2)^4",
];
