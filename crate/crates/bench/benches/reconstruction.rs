use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wordrecon_bench::{alphabet, random_sets, random_word, rng};
use wordrecon_core::binary::minimal_unique_level;
use wordrecon_core::multi::{
    coverage_decide, reconstruct_from_pairwise_projections, ProjectionMap,
};
use wordrecon_core::{
    adaptive_reconstruct, reconstruct_binary, scattered_factor_count, shuffle, Alphabet,
    BlockSystem, Orientation, Word, WordOracle,
};

fn counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("scattered_factor_count");
    let binary = Alphabet::binary();
    let mut r = rng(1);
    for n in [100, 1000, 10_000] {
        let w = random_word(&mut r, &binary, n);
        let u = random_word(&mut r, &binary, 8);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| scattered_factor_count(black_box(&w), black_box(&u)).unwrap())
        });
    }
    g.finish();
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("shuffle");
    let binary = Alphabet::binary();
    let mut r = rng(2);
    for len in [3, 5, 7] {
        let x = random_word(&mut r, &binary, len);
        let y = random_word(&mut r, &binary, len);
        g.bench_with_input(BenchmarkId::from_parameter(len), &len, |b, _| {
            b.iter(|| shuffle(black_box(&x), black_box(&y)).unwrap())
        });
    }
    g.finish();
}

fn binary_reconstruction(c: &mut Criterion) {
    let mut g = c.benchmark_group("binary");
    let binary = Alphabet::binary();
    let mut r = rng(3);
    for n in [20, 60, 100] {
        let w: Word = random_word(&mut r, &binary, n);
        let level = minimal_unique_level(&w).unwrap();
        let orientation = Orientation::preferred(w.count(0), w.count(1));
        let sys = BlockSystem::from_word(&w, orientation, level).unwrap();
        g.bench_with_input(BenchmarkId::new("blocks", n), &n, |b, _| {
            b.iter(|| reconstruct_binary(black_box(&sys), &binary).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("adaptive", n), &n, |b, _| {
            b.iter(|| adaptive_reconstruct(&mut WordOracle::new(w.clone())).unwrap())
        });
    }
    g.finish();
}

fn pairwise_merge(c: &mut Criterion) {
    let mut g = c.benchmark_group("pairwise_merge");
    g.sample_size(10);
    let mut r = rng(4);
    for (q, n) in [(4, 10_000), (10, 100_000)] {
        let w = random_word(&mut r, &alphabet(q), n);
        let map = ProjectionMap::of_word(&w);
        g.bench_with_input(BenchmarkId::new(format!("q{q}"), n), &n, |b, _| {
            b.iter(|| reconstruct_from_pairwise_projections(black_box(&map)).unwrap())
        });
    }
    g.finish();
}

fn coverage(c: &mut Criterion) {
    let mut g = c.benchmark_group("coverage");
    let mut r = rng(5);
    for q in [8, 32] {
        let a = alphabet(q);
        let sets = random_sets(&mut r, q, 4 * q, 0.4);
        g.bench_with_input(BenchmarkId::from_parameter(q), &q, |b, _| {
            b.iter(|| coverage_decide(&a, black_box(&sets)))
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    counts,
    products,
    binary_reconstruction,
    pairwise_merge,
    coverage
);
criterion_main!(benches);
