//! Deterministic input generators shared by the benchmarks.

use rectihull_core::region::{s5_region, uniform_sample};
use rectihull_core::Point2;

/// Uniform sample of the benchmark region, fixed seed.
pub fn benchmark_sample(n: usize) -> Vec<Point2> {
    uniform_sample(&s5_region(), n, 42)
        .expect("benchmark region samples")
        .points
}
