use nalgebra::Vector3;

use super::IntegratorConfig;
use crate::bloch::BlochState;
use crate::driven::{BathRates, ModelParams};
use crate::error::Result;
use crate::linalg::{self, Mat2, C64};

/// Interaction-picture state `ρ̃(t) = U_S†(t) ρ(t) U_S(t)`, atom basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSample {
    pub t: f64,
    pub rho: Mat2,
}

impl OracleSample {
    /// Lab-frame density matrix `U_S ρ̃ U_S†`.
    pub fn lab_density(&self, model: &ModelParams) -> Mat2 {
        linalg::conjugate(&model.propagator(self.t), &self.rho)
    }

    pub fn lab_bloch_vector(&self, model: &ModelParams) -> Vector3<f64> {
        linalg::bloch_from_density(&self.lab_density(model))
    }

    /// Components of `ρ̃` on the Floquet axes, comparable to
    /// [`crate::driven::DrivenQubit::floquet_components`] up to the `e^{−iΩ_r t}`
    /// rotation of the coherence.
    pub fn floquet_density(&self, model: &ModelParams) -> Mat2 {
        let basis = model.floquet_basis();
        basis.adjoint() * self.rho * basis
    }
}

/// `ρ ↦ Σ_q γ_q (σ̄_q ρ σ̄_q† − ½{σ̄_q†σ̄_q, ρ})`, `q = −, 0, +`.
pub fn lindblad_generator(model: &ModelParams, rates: &BathRates) -> impl Fn(&Mat2) -> Mat2 {
    let ops = model.floquet_operators();
    let channels: Vec<(f64, Mat2, Mat2, Mat2)> =
        [rates.gamma_minus, rates.gamma_zero, rates.gamma_plus]
            .into_iter()
            .zip(ops)
            .filter(|(gamma, _)| *gamma != 0.0)
            .map(|(gamma, a)| {
                let a_dag = a.adjoint();
                let number = a_dag * a;
                (gamma, a, a_dag, number)
            })
            .collect();
    move |rho: &Mat2| {
        channels
            .iter()
            .fold(Mat2::zeros(), |acc, (gamma, a, a_dag, number)| {
                let anticommutator = number * rho + rho * number;
                acc + (a * rho * a_dag - anticommutator * C64::from(0.5)) * C64::from(*gamma)
            })
    }
}

/// Fixed-step RK4 integration of the Floquet-frame master equation from
/// the lab-frame initial state (`ρ̃(0) = ρ(0)`).
pub fn integrate_lindblad(
    model: &ModelParams,
    rates: &BathRates,
    initial: &BlochState,
    cfg: &IntegratorConfig,
) -> Result<Vec<OracleSample>> {
    cfg.validate(model, rates)?;
    let generator = lindblad_generator(model, rates);
    let steps = cfg.steps();
    let dt = cfg.dt;
    let half = C64::from(dt / 2.0);
    let full = C64::from(dt);
    let sixth = C64::from(dt / 6.0);
    let two = C64::from(2.0);

    let mut rho = initial.density_matrix();
    let mut samples = Vec::with_capacity(steps / cfg.sample_every + 2);
    samples.push(OracleSample { t: 0.0, rho });
    for k in 1..=steps {
        let k1 = generator(&rho);
        let k2 = generator(&(rho + k1 * half));
        let k3 = generator(&(rho + k2 * half));
        let k4 = generator(&(rho + k3 * full));
        rho += (k1 + k2 * two + k3 * two + k4) * sixth;
        if k % cfg.sample_every == 0 || k == steps {
            samples.push(OracleSample {
                t: k as f64 * dt,
                rho,
            });
        }
    }
    Ok(samples)
}
