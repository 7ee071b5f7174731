//! Compares the data-parallel and sequential execution of the verification
//! suites. With `--no-default-features` both paths are sequential and the
//! comparison collapses, which is the expected fallback behavior.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use psl2_ogs::verify::{run_suite, run_suite_seq, Suite};

fn bench_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let cases = [
        ("identities-q29", 29, Suite::Identities),
        ("conversion-q13", 13, Suite::Conversion),
        ("enumeration-q13", 13, Suite::Enumeration),
        ("enumeration-q27", 27, Suite::Enumeration),
    ];
    for (name, q, suite) in cases {
        group.bench_function(format!("{name}/parallel"), |b| {
            b.iter(|| run_suite(black_box(q), suite).unwrap())
        });
        group.bench_function(format!("{name}/sequential"), |b| {
            b.iter(|| run_suite_seq(black_box(q), suite).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_suites);
criterion_main!(benches);
