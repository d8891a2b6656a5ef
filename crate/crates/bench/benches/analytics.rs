use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use winding_atlas::specfun::{bessel_i_scaled, pm_density_series};
use winding_atlas::winding::{g_alpha, mean_total_minus_zero, z_alpha};
use winding_atlas::{AlphaValue, AreaDensityParams, QuadratureSpec, SeriesTolerance};

fn special_functions(c: &mut Criterion) {
    let mut g = c.benchmark_group("specfun");
    for (nu, x) in [(0.3, 1.5), (7.7, 40.0), (60.25, 30.0)] {
        g.bench_function(format!("bessel_i_scaled({nu}, {x})"), |b| {
            b.iter(|| bessel_i_scaled(black_box(nu), black_box(x)).unwrap())
        });
    }
    let tol = SeriesTolerance::default();
    for x in [0.05, 1.0, 12.0] {
        let alpha = AlphaValue::new(0.3).unwrap();
        g.bench_function(format!("g_alpha(0.3, {x})"), |b| b.iter(|| g_alpha(alpha, black_box(x), tol).unwrap()));
    }
    for m in [1, 8, 64] {
        let p = AreaDensityParams::new(m, 1.0, 0.4).unwrap();
        g.bench_function(format!("pm_density_series(m={m})"), |b| {
            b.iter(|| pm_density_series(black_box(p), tol).unwrap())
        });
    }
    g.finish();
}

fn area_integrals(c: &mut Criterion) {
    let mut g = c.benchmark_group("winding");
    g.sample_size(10);
    let spec = QuadratureSpec::default();
    for m in [4, 256] {
        let alpha = AlphaValue::new(0.25).unwrap();
        g.bench_function(format!("z_alpha(m={m})"), |b| b.iter(|| z_alpha(black_box(m), alpha, 1.0, &spec).unwrap()));
    }
    g.bench_function("mean_total_minus_zero(m=16)", |b| {
        b.iter(|| mean_total_minus_zero(black_box(16), 1.0, &spec).unwrap())
    });
    g.finish();
}

criterion_group!(benches, special_functions, area_integrals);
criterion_main!(benches);
