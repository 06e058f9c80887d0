use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rpl_core::budget::DEFAULT_WORD_CAP;
use rpl_core::oracle::{cross_check_parking, run_suite, SuiteParams};
use rpl_core::words::enumerate_parking_words_with;
use rpl_core::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate-parking");
    for (m, n) in [(3, 7), (5, 5)] {
        for (label, exec) in MODES {
            g.bench_with_input(
                BenchmarkId::new(label, format!("{m}x{n}")),
                &exec,
                |b, &e| b.iter(|| enumerate_parking_words_with(m, n, DEFAULT_WORD_CAP, e).unwrap()),
            );
        }
    }
    g.finish();
}

fn fixed_point_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("fixed-point-vs-parking");
    g.sample_size(10);
    for (m, n) in [(3, 5), (4, 4)] {
        for (label, exec) in MODES {
            g.bench_with_input(
                BenchmarkId::new(label, format!("{m}x{n}")),
                &exec,
                |b, &e| b.iter(|| cross_check_parking(m, n, e).unwrap()),
            );
        }
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    for name in ["absorption", "placement-agreement", "skeleton-union"] {
        let params = SuiteParams::new(vec![(3, 4), (4, 3), (3, 5)]);
        for (label, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(label, name), &exec, |b, &e| {
                b.iter(|| run_suite(name, &params, e).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, enumeration, fixed_point_sweep, suites);
criterion_main!(benches);
