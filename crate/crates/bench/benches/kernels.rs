use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dyon_bench::{dyon_state, hydrogen_state, system};
use dyon_core::density::{radial_density_profile, state_peak_radius, total_charge};
use dyon_core::numkernel::{confluent_polynomial, weighted_jacobi};
use dyon_core::spectrum::{energy, enumerate_levels, Branch};
use dyon_core::wavefunc::AngularParams;
use dyon_core::{BoundState, Normalization, Preset, QuantumNumbers};

fn kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("kernels");
    for n in [4u32, 16, 64] {
        g.bench_with_input(BenchmarkId::new("confluent_polynomial", n), &n, |b, &n| {
            b.iter(|| confluent_polynomial(black_box(n), 9.0, black_box(37.5)))
        });
    }
    g.bench_function("weighted_jacobi_n100", |b| {
        b.iter(|| weighted_jacobi(black_box(100), -2.0, 3.0, black_box(1.1)))
    });
    g.finish();
}

fn spectrum(c: &mut Criterion) {
    let dyon = system(Preset::DyonZ);
    c.bench_function("energy_dyon_l34", |b| {
        b.iter(|| energy(&dyon, black_box(3), black_box(34.0), Branch::Positive))
    });
    let hydrogen = system(Preset::Hydrogen);
    c.bench_function("enumerate_levels_hydrogen_np40", |b| {
        b.iter(|| enumerate_levels(&hydrogen, black_box(40)))
    });
}

fn wavefunctions(c: &mut Criterion) {
    let dyon = system(Preset::DyonZ);
    c.bench_function("bound_state_dyon_n8", |b| {
        b.iter(|| BoundState::bound(&dyon, QuantumNumbers::new(8, 34.0, 0.0)))
    });
    c.bench_function("angular_params_mu_half_integer", |b| {
        b.iter(|| AngularParams::new(black_box(-2.5), 100.5, 0.5))
    });
    let st = hydrogen_state(2, 1.0);
    c.bench_function("psi_eval_hydrogen", |b| {
        b.iter(|| st.psi_eval(black_box(12.0), 0.7, 0.3, 0.0))
    });
}

fn densities(c: &mut Criterion) {
    let st = dyon_state();
    let grid = dyon_core::density::default_r_grid(&st, 2000);
    c.bench_function("density_profile_dyon_2000", |b| {
        b.iter(|| radial_density_profile(&st, &grid, Normalization::Charge))
    });
    c.bench_function("peak_radius_dyon", |b| b.iter(|| state_peak_radius(&st)));
    c.bench_function("total_charge_dyon", |b| b.iter(|| total_charge(&st, Normalization::Charge)));
}

criterion_group!(benches, kernels, spectrum, wavefunctions, densities);
criterion_main!(benches);
