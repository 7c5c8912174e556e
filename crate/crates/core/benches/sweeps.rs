use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use combilab_core::hessenberg::{sum_principal_minors, HessFSpec};
use combilab_core::verify::{self, GridBounds, Identity};
use combilab_core::Exec;

fn modes() -> Vec<(&'static str, Exec)> {
    let mut v = vec![("sequential", Exec::Sequential)];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Exec::Parallel));
    }
    v
}

fn minor_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("minor_sum_enumeration");
    group.sample_size(10);
    for n in [14, 16, 18] {
        let spec = HessFSpec::new(n, 2).unwrap();
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, n), &spec, |b, &spec| {
                b.iter(|| sum_principal_minors(black_box(spec), n / 2, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn identity_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_sweep");
    group.sample_size(10);
    let cases = [
        (Identity::Prop6Minors, GridBounds { max_n: Some(10), ..Default::default() }),
        (Identity::Prop1Agree, GridBounds::default()),
    ];
    for (id, bounds) in cases {
        for (name, exec) in modes() {
            group.bench_function(BenchmarkId::new(name, id), |b| {
                b.iter(|| assert!(verify::run(id, black_box(&bounds), exec).passed()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, minor_sums, identity_sweeps);
criterion_main!(benches);
