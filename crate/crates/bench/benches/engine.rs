//! Benchmarks for the series ring, kernel jets and full observable
//! assemblies. Run with `cargo bench -p casimir-bench`.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use num_complex::Complex64;

use casimir_core::continuation::{hankel_quadrature, HankelParams};
use casimir_core::kernels::{
    reduced_cylinder_jet, reduced_kernel_numeric, wedge_mod_cylinder_jet, BoundaryMode,
    WedgeGeometry, WedgeVar,
};
use casimir_core::observables::{stress_halfspace_massive, stress_parallel, stress_wedge, FaceBc};
use casimir_core::series::LaurentSeries;

fn series_ring(c: &mut Criterion) {
    let a = LaurentSeries::new(-2, (0..16).map(|k| 1.0 / (k + 1) as f64).collect());
    let b = LaurentSeries::new(0, (0..16).map(|k| (-0.5f64).powi(k)).collect());
    c.bench_function("series_mul_16", |bench| {
        bench.iter(|| std::hint::black_box(&a).mul_series(std::hint::black_box(&b)))
    });
    c.bench_function("series_invert_16", |bench| {
        bench.iter(|| std::hint::black_box(&b).inverted().unwrap())
    });
}

fn kernel_jets(c: &mut Criterion) {
    c.bench_function("reduced_cylinder_jet_dd", |bench| {
        bench
            .iter(|| reduced_cylinder_jet(BoundaryMode::DirichletDirichlet, 1.0, 0.37, 16).unwrap())
    });
    let geom = WedgeGeometry::interior(1.2, 1.0, 0.5).unwrap();
    c.bench_function("wedge_jet_theta_pair", |bench| {
        bench.iter(|| {
            wedge_mod_cylinder_jet(
                BoundaryMode::DirichletDirichlet,
                &geom,
                &[WedgeVar::Theta, WedgeVar::ThetaP],
                16,
            )
            .unwrap()
        })
    });
}

fn observables(c: &mut Criterion) {
    c.bench_function("stress_parallel_dd", |bench| {
        bench.iter(|| stress_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0, 0.2, 0.4).unwrap())
    });
    let geom = WedgeGeometry::interior(1.2, 1.0, 0.5).unwrap();
    c.bench_function("stress_wedge_dirichlet", |bench| {
        bench.iter_batched(
            || geom,
            |g| stress_wedge(BoundaryMode::DirichletDirichlet, &g, 0.2).unwrap(),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("stress_halfspace_massive", |bench| {
        bench.iter(|| stress_halfspace_massive(FaceBc::Dirichlet, 1.0, 1.0, 0.2, 0.8).unwrap())
    });
}

fn quadrature(c: &mut Criterion) {
    let params = HankelParams::default();
    let kernel =
        |t: Complex64| reduced_kernel_numeric(BoundaryMode::DirichletDirichlet, 1.0, 0.3, 0.3, t);
    c.bench_function("hankel_quadrature_diag", |bench| {
        bench.iter(|| hankel_quadrature(&kernel, Complex64::new(-1.5, 0.0), &params))
    });
}

criterion_group!(benches, series_ring, kernel_jets, observables, quadrature);
criterion_main!(benches);
