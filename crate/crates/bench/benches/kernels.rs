//! Benchmarks for the kernels everything else leans on: bit-packed row
//! reduction, the pairwise distance sweep, lifted MRD enumeration, and
//! Gaussian-binomial bound arithmetic. Inputs are seeded so runs are
//! comparable across machines and revisions.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use liftmrd::bounds::johnson_bound;
use liftmrd::field::Field;
use liftmrd::lincode::{incidence_matrix, spectrum_certificate};
use liftmrd::linalg::MatrixGF;
use liftmrd::rankmetric::{lifted_mrd_code, verify_min_distance, DistanceMode};
use liftmrd::rng::SplitMix64;
use liftmrd::{ENUMERATION_CAP, PAIR_CAP};

fn bench_rref(c: &mut Criterion) {
    let f2 = Field::new(2).unwrap();
    let f3 = Field::new(3).unwrap();
    let mut rng = SplitMix64::new(0xBE7C4);
    let gf2: Vec<u64> = (0..64 * 64).map(|_| rng.below(2)).collect();
    let gf3: Vec<u64> = (0..32 * 32).map(|_| rng.below(3)).collect();
    c.bench_function("rref gf2 64x64", |b| {
        b.iter(|| {
            let mut m = MatrixGF::from_entries(2, 64, 64, black_box(&gf2));
            black_box(m.rref(&f2))
        })
    });
    c.bench_function("rref gf3 32x32", |b| {
        b.iter(|| {
            let mut m = MatrixGF::from_entries(3, 32, 32, black_box(&gf3));
            black_box(m.rref(&f3))
        })
    });
}

fn bench_pair_sweep(c: &mut Criterion) {
    let f = Field::new(2).unwrap();
    let code = lifted_mrd_code(2, 7, 3, 2, ENUMERATION_CAP).unwrap();
    c.bench_function("distance sweep (7,256,4,3)_2", |b| {
        b.iter(|| {
            black_box(
                verify_min_distance(&f, black_box(&code), DistanceMode::Exhaustive, PAIR_CAP)
                    .unwrap(),
            )
        })
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(20);
    group.bench_function("lifted MRD (8,4096,4,4)_2", |b| {
        b.iter(|| black_box(lifted_mrd_code(2, 8, 4, 2, ENUMERATION_CAP).unwrap()))
    });
    group.finish();
}

fn bench_bounds(c: &mut Criterion) {
    c.bench_function("johnson (2,14,3,2)", |b| {
        b.iter(|| black_box(johnson_bound(2, 14, 3, 2).unwrap()))
    });
    c.bench_function("johnson (5,9,3,2)", |b| {
        b.iter(|| black_box(johnson_bound(5, 9, 3, 2).unwrap()))
    });
}

fn bench_spectrum(c: &mut Criterion) {
    let f = Field::new(2).unwrap();
    let code = lifted_mrd_code(2, 6, 3, 2, ENUMERATION_CAP).unwrap();
    let m = incidence_matrix(&f, &code).unwrap();
    c.bench_function("spectrum certificate 64x56", |b| {
        b.iter(|| black_box(spectrum_certificate(black_box(&m)).unwrap()))
    });
}

criterion_group!(
    kernels,
    bench_rref,
    bench_pair_sweep,
    bench_enumeration,
    bench_bounds,
    bench_spectrum
);
criterion_main!(kernels);
