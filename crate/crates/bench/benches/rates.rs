use std::hint::black_box;

use bloch_thermo::driven::{
    explicit_decay_constants, rates_from_spectra, BathSpectrum, OhmicSpectrum,
};
use bloch_thermo::first_law;
use bloch_thermo::oracle::{integrate_lindblad, net_variation, IntegratorConfig};
use bloch_thermo::{ModelParams, SpectralModel};
use bloch_thermo_bench::{reference_qubit, trajectory_points};
use criterion::{criterion_group, criterion_main, Criterion};

fn first_law_rates(c: &mut Criterion) {
    let qubit = reference_qubit();
    let points = trajectory_points(&qubit, 30.0, 1000);
    c.bench_function("first_law/evaluate_1000", |b| {
        b.iter(|| {
            points
                .iter()
                .map(|p| first_law::evaluate(black_box(p)).unwrap().closure_error())
                .fold(0.0, f64::max)
        })
    });
    c.bench_function("closed_form/point", |b| {
        b.iter(|| qubit.point(black_box(12.5)).unwrap())
    });
}

fn integration(c: &mut Criterion) {
    let qubit = reference_qubit();
    let cfg = IntegratorConfig::new(1e-3, 30.0, 1000).unwrap();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("rk4_t30", |b| {
        b.iter(|| {
            integrate_lindblad(qubit.model(), qubit.rates(), &qubit.initial().state(), &cfg)
                .unwrap()
        })
    });
    group.bench_function("net_variation_t30", |b| {
        b.iter(|| net_variation(|t| qubit.point(t), 30.0, 1e-3).unwrap())
    });
    group.finish();
}

fn spectral_rates(c: &mut Criterion) {
    let model = ModelParams::new(1.0, 0.9, 0.3).unwrap();
    let bath = |coupling, beta| BathSpectrum {
        coupling,
        spectrum: OhmicSpectrum::new(beta, 10.0).unwrap(),
    };
    let spectral = SpectralModel {
        dephasing: bath(0.2, 1.0),
        photon: bath(0.3, 2.0),
    };
    c.bench_function("spectral/gamma_sum", |b| {
        b.iter(|| rates_from_spectra(black_box(&model), &spectral).unwrap())
    });
    c.bench_function("spectral/explicit", |b| {
        b.iter(|| explicit_decay_constants(black_box(&model), &spectral).unwrap())
    });
}

criterion_group!(benches, first_law_rates, integration, spectral_rates);
criterion_main!(benches);
