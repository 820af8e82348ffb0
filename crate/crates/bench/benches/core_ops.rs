use ads_spin1::dkp_algebra::verify_all;
use ads_spin1::radial_modes::build_jplus_wave;
use ads_spin1::special_functions::{hyp2f1, wigner_d, Hyp2F1Params};
use ads_spin1::spectrum::build_level_table;
use ads_spin1::verifier::{default_grid, residual_system};
use ads_spin1::EquationId;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn hypergeometric_eval(c: &mut Criterion) {
    // Non-terminating parameters force the full transformed series.
    let params = Hyp2F1Params::new(0.35, 1.1, 2.25);
    c.bench_function("hyp2f1 series at z = -4", |b| {
        b.iter(|| hyp2f1(black_box(&params), black_box(-4.0)).unwrap())
    });
}

fn rotation_function(c: &mut Criterion) {
    c.bench_function("wigner_d j=5", |b| {
        b.iter(|| wigner_d(black_box(5), 2, -3, black_box(1.9)).unwrap())
    });
}

fn bundle_construction(c: &mut Criterion) {
    c.bench_function("build_jplus_wave mass_sq=2 n=1 j=2", |b| {
        b.iter(|| build_jplus_wave(black_box(2.0), 1, 2).unwrap())
    });
}

fn system_residual(c: &mut Criterion) {
    let bundle = build_jplus_wave(2.0, 1, 2).unwrap();
    let grid = default_grid();
    c.bench_function("residual_system six-equation mixed system", |b| {
        b.iter(|| residual_system(black_box(&bundle), EquationId::Sys15b, &grid).unwrap())
    });
}

fn level_table(c: &mut Criterion) {
    c.bench_function("build_level_table n_max=8", |b| {
        b.iter(|| build_level_table(black_box(8)))
    });
}

fn algebra_identities(c: &mut Criterion) {
    c.bench_function("verify_all matrix identities", |b| b.iter(|| verify_all().unwrap()));
}

criterion_group!(
    benches,
    hypergeometric_eval,
    rotation_function,
    bundle_construction,
    system_residual,
    level_table,
    algebra_identities
);
criterion_main!(benches);
