use criterion::{criterion_group, criterion_main, Criterion};
use gproj_core::arquiver::full_ungraded_ar_quiver;
use gproj_core::{fixtures, parse_algebra, verify, Analysis};
use std::hint::black_box;

fn pipeline(c: &mut Criterion) {
    let text = serde_json::to_string(&fixtures::lambda_star_document()).unwrap();
    c.bench_function("parse lambda_star", |b| b.iter(|| parse_algebra(black_box(&text)).unwrap()));

    for (name, alg) in [("lambda_star", fixtures::lambda_star()), ("nakayama_4_4", fixtures::nakayama(4, 4))]
    {
        c.bench_function(&format!("analysis {name}"), |b| {
            b.iter(|| Analysis::new(black_box(alg.clone())).unwrap())
        });
        let an = Analysis::new(alg).unwrap();
        c.bench_function(&format!("ar quiver {name}"), |b| {
            b.iter(|| full_ungraded_ar_quiver(black_box(&an)).unwrap())
        });
        c.bench_function(&format!("verify {name}"), |b| b.iter(|| verify::verify_analysis(black_box(&an))));
    }
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
