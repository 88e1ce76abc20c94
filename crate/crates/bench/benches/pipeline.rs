use std::hint::black_box;
use std::io;

use criterion::{criterion_group, criterion_main, Criterion};

use simcross::diagram::project_all;
use simcross::invariants::{alexander, jones, simplify};
use simcross::polygon::default_delta;
use simcross::search::{run_search, SearchConfig};
use simcross::{builtin_quarter, project_and_count, symmetrize, triple_count, twist_quarter_unified, Axis, TwistSpec};

fn counting(c: &mut Criterion) {
    let spec = TwistSpec::new(3, 1, default_delta()).unwrap();
    let c62 = symmetrize(&twist_quarter_unified(&spec).unwrap());
    let t45 = symmetrize(&builtin_quarter("T45", &default_delta()).unwrap());
    c.bench_function("triple_count C(6,2)", |b| {
        b.iter(|| triple_count(black_box(&c62)).unwrap())
    });
    c.bench_function("triple_count T(4,5)", |b| {
        b.iter(|| triple_count(black_box(&t45)).unwrap())
    });
}

fn invariants(c: &mut Criterion) {
    let t45 = symmetrize(&builtin_quarter("T45", &default_delta()).unwrap());
    let z = project_and_count(&t45, Axis::Z).unwrap().pd_code;
    let [x, _, _] = project_all(&t45).unwrap();
    c.bench_function("simplify T(4,5) x-projection", |b| {
        b.iter(|| simplify(black_box(&x.pd_code)).unwrap())
    });
    c.bench_function("alexander T(4,5) z-projection", |b| {
        b.iter(|| alexander(black_box(&z)).unwrap())
    });

    let spec = TwistSpec::new(2, 1, default_delta()).unwrap();
    let c42 = symmetrize(&twist_quarter_unified(&spec).unwrap());
    let reduced = simplify(&project_and_count(&c42, Axis::Z).unwrap().pd_code).unwrap();
    c.bench_function("jones C(4,2) reduced", |b| {
        b.iter(|| jones(black_box(&reduced)).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let cfg = SearchConfig {
        samples: 64,
        ..SearchConfig::default()
    };
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("64 samples, 1 worker", |b| {
        b.iter(|| run_search(black_box(&cfg), 1, &mut io::sink()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, counting, invariants, search);
criterion_main!(benches);
