use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wordpoly::cover::{cover_pair, CoverMode};
use wordpoly::equation::rank_polymatrix;
use wordpoly::oracle::{enumerate_solutions, enumerate_solutions_parallel};
use wordpoly::poly::encode_ratfun;
use wordpoly::word::combinatorial_rank;
use wordpoly::{EnumerationBudget, Word};
use wordpoly_bench::{cover_pair as pair, random_matrix, random_morphism, three_cycle};

fn rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank_polymatrix");
    for size in [3usize, 5, 8] {
        let m = random_matrix(size as u64, size, size, 6);
        g.bench_with_input(BenchmarkId::from_parameter(size), &m, |b, m| b.iter(|| rank_polymatrix(black_box(m))));
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let sys = three_cycle();
    let mut g = c.benchmark_group("enumerate_solutions");
    g.sample_size(10);
    for max in [6usize, 8] {
        let budget = EnumerationBudget::binary(max);
        g.bench_with_input(BenchmarkId::new("serial", max), &budget, |b, budget| {
            b.iter(|| enumerate_solutions(black_box(&sys), budget).len())
        });
        g.bench_with_input(BenchmarkId::new("workers_4", max), &budget, |b, budget| {
            b.iter(|| enumerate_solutions_parallel(black_box(&sys), budget, 4).len())
        });
    }
    g.finish();
}

fn cover(c: &mut Criterion) {
    let (e1, e2) = pair();
    c.bench_function("cover_pair/minimal", |b| b.iter(|| cover_pair(black_box(&e1), &e2, CoverMode::Minimal)));
    c.bench_function("cover_pair/full", |b| b.iter(|| cover_pair(black_box(&e1), &e2, CoverMode::FullPairing)));
}

fn combinatorial(c: &mut Criterion) {
    let mut g = c.benchmark_group("combinatorial_rank");
    for n in [3usize, 4, 5] {
        let h = random_morphism(n as u64, n, 8);
        g.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| b.iter(|| combinatorial_rank(black_box(h), n)));
    }
    g.finish();
}

fn ratfun(c: &mut Criterion) {
    let w: Word = "12".repeat(64).parse().unwrap();
    c.bench_function("encode_ratfun/128", |b| b.iter(|| encode_ratfun(black_box(&w))));
}

criterion_group!(benches, rank, enumeration, cover, combinatorial, ratfun);
criterion_main!(benches);
