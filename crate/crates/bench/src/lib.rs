//! Shared fixtures for the criterion benchmarks.

use bloch_thermo::{BathRates, BlochState, DrivenQubit, ModelParams, TrajectoryPoint};

/// Resonant reference setup started from the bare thermal state at `βω₀ = 1`.
pub fn reference_qubit() -> DrivenQubit {
    let state = BlochState::from_components(0.0, 0.0, -(0.5f64).tanh())
        .expect("thermal state lies inside the Bloch ball");
    DrivenQubit::new(ModelParams::reference(), BathRates::reference(), state)
}

/// `count` trajectory points evenly spaced over `[0, t_end]`.
pub fn trajectory_points(qubit: &DrivenQubit, t_end: f64, count: usize) -> Vec<TrajectoryPoint> {
    (0..count)
        .map(|k| {
            let t = t_end * k as f64 / (count.max(2) - 1) as f64;
            qubit.point(t).expect("non-negative time")
        })
        .collect()
}
