//! Benchmarks for the data-parallel kernels.
//!
//! The same suite measures both execution modes: run `cargo bench` for the
//! rayon path (default features) and `cargo bench --no-default-features` for
//! the sequential fallback. Group names carry the active mode so criterion
//! baselines from the two runs can be compared directly.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use vecq::channels::depolarizing;
use vecq::random;
use vecq::tomography::{presets, simulate_probs};
use vecq::veclib::{kron, ReshuffleSpec};

const MODE: &str = if cfg!(feature = "parallel") {
    "parallel"
} else {
    "sequential"
};

fn bench_matmul(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("matmul/{MODE}"));
    let mut rng = ChaCha12Rng::seed_from_u64(101);
    for n in [64usize, 128, 256] {
        let a = random::gaussian_matrix(n, n, &mut rng);
        let b = random::gaussian_matrix(n, n, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| a.matmul(&b).unwrap());
        });
    }
    group.finish();
}

fn bench_kron(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("kron/{MODE}"));
    let mut rng = ChaCha12Rng::seed_from_u64(102);
    for n in [8usize, 16, 32] {
        let a = random::gaussian_matrix(n, n, &mut rng);
        let b = random::gaussian_matrix(n, n, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| kron(&a, &b));
        });
    }
    group.finish();
}

fn bench_reshuffle(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("reshuffle/{MODE}"));
    let mut rng = ChaCha12Rng::seed_from_u64(103);
    for d in [8usize, 16] {
        let spec = ReshuffleSpec::square(d).unwrap();
        let m = random::gaussian_matrix(d * d, d * d, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |bench, _| {
            bench.iter(|| spec.apply(m.entries()).unwrap());
        });
    }
    group.finish();
}

fn bench_simulate_probs(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("simulate_probs/{MODE}"));
    group.sample_size(10);
    let chan = depolarizing(2, 0.4).unwrap();
    let set = presets::qubit_input_states();
    let meas = presets::tetrahedral_povm();
    for shots in [100_000u64, 1_000_000] {
        group.bench_with_input(
            BenchmarkId::from_parameter(shots),
            &shots,
            |bench, &shots| {
                bench.iter(|| simulate_probs(&chan, &set, &meas, Some(shots), 7).unwrap());
            },
        );
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_matmul,
    bench_kron,
    bench_reshuffle,
    bench_simulate_probs
);
criterion_main!(benches);
