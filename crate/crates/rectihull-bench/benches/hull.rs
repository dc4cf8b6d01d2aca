use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rectihull_bench::benchmark_sample;
use rectihull_core::estimate::estimate_angle;
use rectihull_core::hull::build_hull;
use rectihull_core::oracle::naive_contains;
use rectihull_core::Point2;

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_hull");
    for n in [1_000usize, 10_000, 100_000] {
        let pts = benchmark_sample(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, pts| {
            b.iter(|| build_hull(black_box(pts), std::f64::consts::FRAC_PI_4).unwrap());
        });
    }
    group.finish();
}

fn bench_contains(c: &mut Criterion) {
    let pts = benchmark_sample(10_000);
    let hull = build_hull(&pts, std::f64::consts::FRAC_PI_4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let queries: Vec<Point2> = (0..1024)
        .map(|_| Point2::new(rng.random_range(-0.2..1.2), rng.random_range(-0.2..1.2)))
        .collect();
    c.bench_function("contains_1024_queries_n10000", |b| {
        b.iter(|| {
            let mut hits = 0usize;
            for &q in &queries {
                hits += usize::from(hull.contains(black_box(q)));
            }
            hits
        });
    });
    c.bench_function("oracle_contains_64_queries_n10000", |b| {
        b.iter(|| {
            let mut hits = 0usize;
            for &q in &queries[..64] {
                hits += usize::from(naive_contains(&pts, std::f64::consts::FRAC_PI_4, black_box(q)).unwrap());
            }
            hits
        });
    });
}

fn bench_angle_scan(c: &mut Criterion) {
    let pts = benchmark_sample(1_000);
    c.bench_function("estimate_angle_grid90_n1000", |b| {
        b.iter(|| estimate_angle(black_box(&pts), 90, false).unwrap());
    });
}

criterion_group!(benches, bench_build, bench_contains, bench_angle_scan);
criterion_main!(benches);
