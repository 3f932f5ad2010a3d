//! Input generators shared by the benchmarks.

use covertower::IntegerMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `count` seeded random `dim × dim` matrices with entries in `[-bound, bound]`.
pub fn sample_matrices(seed: u64, count: usize, dim: usize, bound: i64) -> Vec<IntegerMatrix> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rows: Vec<Vec<i64>> = (0..dim)
                .map(|_| (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect())
                .collect();
            IntegerMatrix::from_rows(&rows).expect("rows have equal length")
        })
        .collect()
}
