use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use riesz_lab::criteria::greedy_riesz_subset;
use riesz_lab::witness::witness_ratio;
use riesz_lab::{generate, gram_matrix, gram_spectrum, Generator, Window};
use riesz_lab_bench::{cantor_set, half_interval, thin_cantor, thue_morse, thue_morse_window, witness_config};

fn bench_gram(c: &mut Criterion) {
    let mut group = c.benchmark_group("gram");
    let set = cantor_set();
    for half in [32i64, 64, 128] {
        let lambda = thue_morse_window(half);
        group.bench_with_input(BenchmarkId::new("assemble", half), &lambda, |b, l| {
            b.iter(|| gram_matrix(black_box(&set), l).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("spectrum", half), &lambda, |b, l| {
            b.iter(|| gram_spectrum(black_box(&set), l).unwrap())
        });
    }
    group.finish();
}

fn bench_greedy(c: &mut Criterion) {
    let set = half_interval();
    let window = Window::new(-48, 48).unwrap();
    c.bench_function("greedy/half_interval_97", |b| {
        b.iter(|| greedy_riesz_subset(black_box(&set), window, 0.1).unwrap())
    });
}

fn bench_witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness");
    group.sample_size(10);
    let set = thin_cantor();
    for m in [5usize, 20] {
        let config = witness_config(m);
        group.bench_with_input(BenchmarkId::new("ratio", m), &config, |b, cfg| {
            b.iter(|| witness_ratio(black_box(&set), cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_generate(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate");
    let window = Window::new(-(1 << 14), 1 << 14).unwrap();
    let generators = [
        ("thue_morse", thue_morse()),
        ("bohr", Generator::Bohr { alpha: 2f64.sqrt() - 1.0, delta: 0.05 }),
        ("random", Generator::Random { p: 0.5, seed: 7 }),
    ];
    for (name, g) in &generators {
        group.bench_function(*name, |b| b.iter(|| generate(black_box(g), window).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_gram, bench_greedy, bench_witness, bench_generate);
criterion_main!(benches);
