//! Sequential vs parallel execution of the enumeration-backed loops.
//!
//! Run with `cargo bench -p vanish-core`. Without the `parallel` feature both
//! variants take the sequential path.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use vanish_core::points::{enumerate_set, oracle_vanishing_ideal};
use vanish_core::rmcode::{build_code, minimum_distance};
use vanish_core::{parse_spec, Config, Exec, Mode, ParameterizationSpec};

const SURFACE: &str = "q = 5\nvars = y1, y2\nf1 = y1 + 1\nf2 = y2 + 1\nf3 = y1*y2\n";
const RATIONAL: &str = "q = 7\nvars = a, b, c\nf1 = a^2 + b ; g1 = c + 1\nf2 = b*c + 3\nf3 = a - c ; g3 = a*b + 2\n";

fn spec(src: &str) -> ParameterizationSpec {
    parse_spec(src).expect("bench spec parses")
}

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn grid_enumeration(c: &mut Criterion) {
    let rational = spec(RATIONAL);
    let mut group = c.benchmark_group("grid enumeration q=7 n=3");
    for (name, exec) in modes() {
        let config = Config { exec, ..Config::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_set(black_box(&rational), Mode::Projective, &config).unwrap())
        });
    }
    group.finish();
}

fn min_distance(c: &mut Criterion) {
    let set = enumerate_set(&spec(SURFACE), Mode::Projective, &Config::default()).unwrap();
    let mut group = c.benchmark_group("minimum distance");
    group.sample_size(10);
    for d in [2, 3] {
        let code = build_code(&set, d).unwrap();
        for (name, exec) in modes() {
            group.bench_function(BenchmarkId::new(name, format!("d={d}")), |b| {
                b.iter(|| minimum_distance(black_box(&code), u64::MAX, None, exec))
            });
        }
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let set = enumerate_set(&spec(SURFACE), Mode::Projective, &Config::default()).unwrap();
    let mut group = c.benchmark_group("point-ideal oracle");
    group.sample_size(10);
    for (name, exec) in modes() {
        let config = Config { exec, ..Config::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| oracle_vanishing_ideal(black_box(&set), &config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, grid_enumeration, min_distance, oracle);
criterion_main!(benches);
