use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use confspace::corpus;
use confspace::invariants::{full_homology, homology};
use confspace::par;
use confspace::product::product_complex;
use confspace::quotient::braid_model;
use confspace::retract::delta_model;

const MODES: [(&str, bool); 2] = [("parallel", true), ("sequential", false)];

fn product(c: &mut Criterion) {
    let mut g = c.benchmark_group("product");
    let x = corpus::projective_plane();
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "rp2^2"), |b| {
            par::set_parallel(on);
            b.iter(|| product_complex(&x, 2).unwrap())
        });
    }
    g.finish();
}

fn ordered_model(c: &mut Criterion) {
    let mut g = c.benchmark_group("delta_model");
    g.sample_size(10);
    let x = corpus::square();
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "square,3,2 2-skeleton"), |b| {
            par::set_parallel(on);
            b.iter(|| delta_model(&x, 3, 2, 2).unwrap())
        });
    }
    g.finish();
}

fn model_homology(c: &mut Criterion) {
    let mut g = c.benchmark_group("homology");
    g.sample_size(10);
    let m = delta_model(&corpus::square(), 2, 1, 4).unwrap();
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "square,2,1"), |b| {
            par::set_parallel(on);
            b.iter(|| homology(&m.view(), 4, true).unwrap())
        });
    }
    let sd = corpus::projective_plane()
        .barycentric_subdivision()
        .barycentric_subdivision();
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "Sd^2 rp2"), |b| {
            par::set_parallel(on);
            b.iter(|| full_homology(&sd, false).unwrap())
        });
    }
    g.finish();
}

fn unordered_model(c: &mut Criterion) {
    let mut g = c.benchmark_group("braid_model");
    g.sample_size(10);
    let x = corpus::wedge_of_circles(3);
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "wedge3,2,1"), |b| {
            par::set_parallel(on);
            b.iter(|| braid_model(&x, 2, 1, 2).unwrap())
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    product,
    ordered_model,
    model_homology,
    unordered_model
);
criterion_main!(benches);
