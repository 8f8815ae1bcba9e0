use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sixteen_bench::{section_121, MULTIPLES};
use sixteen_core::exact::int;
use sixteen_core::identities::{run_all, verify_octic, verify_ramanujan};
use sixteen_core::oracle::{search_quartic_sum, SearchConfig};
use sixteen_core::sectionb::degree16_tuple;
use sixteen_core::Mode;

fn generate(c: &mut Criterion) {
    let section = section_121();
    let mut group = c.benchmark_group("generate");
    for k in MULTIPLES {
        group.bench_with_input(BenchmarkId::from_parameter(k), &int(k), |b, k| {
            b.iter(|| section.generate(black_box(k)).expect("nondegenerate"))
        });
    }
    group.finish();
}

fn degree16(c: &mut Criterion) {
    c.bench_function("degree16/k=1", |b| b.iter(|| degree16_tuple(black_box(&int(1))).expect("k = 1")));
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    group.bench_function("octic/symbolic", |b| b.iter(|| verify_octic(Mode::Symbolic)));
    group.bench_function("ramanujan/symbolic", |b| b.iter(|| verify_ramanujan(Mode::Symbolic)));
    group.bench_function("catalog/numeric", |b| b.iter(|| run_all(Mode::Numeric)));
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for bound in [30, 120] {
        group.bench_with_input(BenchmarkId::new("quartic-sum", bound), &bound, |b, &bound| {
            b.iter(|| search_quartic_sum(&SearchConfig::new(bound)).expect("bound in range"))
        });
    }
    group.finish();
}

criterion_group!(benches, generate, degree16, identities, oracle);
criterion_main!(benches);
