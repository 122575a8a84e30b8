use nalgebra::{Complex, Vector3};

use super::{BathRates, InitialState, ModelParams};
use crate::bloch::{BlochState, DrivingField};
use crate::error::{Error, Result};
use crate::first_law::TrajectoryPoint;
use crate::linalg::{self, Mat2};

/// Bloch components in the rotating Floquet frame:
/// `x = 2 Re ρ̄^{eg}`, `y = −2 Im ρ̄^{eg}`, `z = Δ̄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloquetBloch {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FloquetBloch {
    pub fn vector(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }
}

/// Closed-form trajectory of the driven atom under the Floquet master equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrivenQubit {
    model: ModelParams,
    rates: BathRates,
    initial: InitialState,
}

impl DrivenQubit {
    pub fn new(model: ModelParams, rates: BathRates, initial: BlochState) -> Self {
        Self {
            model,
            rates,
            initial: InitialState::new(&model, initial),
        }
    }

    pub fn model(&self) -> &ModelParams {
        &self.model
    }

    pub fn rates(&self) -> &BathRates {
        &self.rates
    }

    pub fn initial(&self) -> &InitialState {
        &self.initial
    }

    /// `ρ̄^{eg}(t) = e^{−(Γ2 + iΩ_r)t} ρ̄₀^{eg}`,
    /// `Δ̄(t) = e^{−Γ1 t}(Δ̄₀ + 2κ) − 2κ`.
    pub fn floquet_components(&self, t: f64) -> Result<FloquetBloch> {
        check_time(t)?;
        let coherence = self.initial.floquet_coherence()
            * Complex::from_polar(
                (-self.rates.gamma2() * t).exp(),
                -self.model.rabi_frequency() * t,
            );
        let kappa = self.rates.kappa();
        Ok(FloquetBloch {
            x: 2.0 * coherence.re,
            y: -2.0 * coherence.im,
            z: (-self.rates.gamma1() * t).exp() * (self.initial.floquet_inversion() + 2.0 * kappa)
                - 2.0 * kappa,
        })
    }

    /// Time derivatives of [`Self::floquet_components`].
    pub fn floquet_rates(&self, t: f64) -> Result<FloquetBloch> {
        let v = self.floquet_components(t)?;
        let (g1, g2) = (self.rates.gamma1(), self.rates.gamma2());
        let omega_r = self.model.rabi_frequency();
        Ok(FloquetBloch {
            x: -g2 * v.x - omega_r * v.y,
            y: -g2 * v.y + omega_r * v.x,
            z: -g1 * (v.z + 2.0 * self.rates.kappa()),
        })
    }

    /// Floquet-frame vector expressed on the atom axes of the rotating frame.
    fn rotate_from_floquet(&self, v: &FloquetBloch) -> Vector3<f64> {
        let (c2, s2) = (self.model.cos_2theta(), self.model.sin_2theta());
        Vector3::new(v.x * c2 + v.z * s2, v.y, v.z * c2 - v.x * s2)
    }

    /// Rotation about `z` by `Ωt` taking the rotating frame to the lab frame.
    fn rotating_to_lab(&self, t: f64, v: &Vector3<f64>) -> Vector3<f64> {
        let (s, c) = (self.model.drive_frequency() * t).sin_cos();
        Vector3::new(c * v.x - s * v.y, s * v.x + c * v.y, v.z)
    }

    pub fn bloch_vector(&self, t: f64) -> Result<Vector3<f64>> {
        let v = self.floquet_components(t)?;
        Ok(self.rotating_to_lab(t, &self.rotate_from_floquet(&v)))
    }

    pub fn state(&self, t: f64) -> Result<BlochState> {
        BlochState::new(self.bloch_vector(t)?)
    }

    /// `dn⃗/dt = R_z(Ωt) dv⃗/dt + Ω ẑ × n⃗`
    pub fn state_rate(&self, t: f64) -> Result<Vector3<f64>> {
        let n = self.bloch_vector(t)?;
        let dv = self.rotate_from_floquet(&self.floquet_rates(t)?);
        Ok(self.rotating_to_lab(t, &dv) + self.model.drive_frequency() * Vector3::z().cross(&n))
    }

    pub fn field(&self, t: f64) -> DrivingField {
        self.model.field(t)
    }

    pub fn field_rate(&self, t: f64) -> Vector3<f64> {
        self.model.field_rate(t)
    }

    pub fn point(&self, t: f64) -> Result<TrajectoryPoint> {
        Ok(TrajectoryPoint {
            t,
            state: self.state(t)?,
            field: self.field(t),
            state_rate: self.state_rate(t)?,
            field_rate: self.field_rate(t),
        })
    }

    /// `U = Δ̄((ω₀/2) cos 2θ + ε sin 2θ) + x̄(ε cos 2θ − (ω₀/2) sin 2θ)`
    pub fn internal_energy(&self, t: f64) -> Result<f64> {
        let v = self.floquet_components(t)?;
        let (c2, s2) = (self.model.cos_2theta(), self.model.sin_2theta());
        let (half_w0, eps) = (self.model.omega0() / 2.0, self.model.drive_amplitude());
        Ok(v.z * (half_w0 * c2 + eps * s2) + v.x * (eps * c2 - half_w0 * s2))
    }

    /// `dW_wc/dt = εΩ ȳ`
    pub fn conventional_work_rate(&self, t: f64) -> Result<f64> {
        let v = self.floquet_components(t)?;
        Ok(self.model.drive_amplitude() * self.model.drive_frequency() * v.y)
    }

    /// `ρ̃(t) = U_S†(t) ρ(t) U_S(t)` in the atom basis.
    pub fn interaction_picture_state(&self, t: f64) -> Result<Mat2> {
        let rho = linalg::density_from_bloch(&self.bloch_vector(t)?);
        Ok(linalg::conjugate(&self.model.propagator(t).adjoint(), &rho))
    }

    pub fn steady_state(&self) -> Result<SteadyState> {
        SteadyState::new(&self.model, &self.rates)
    }
}

/// Asymptotic state reached for `Γ1 > 0`, independent of the initial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    kappa: f64,
    cos_2theta: f64,
    sin_2theta: f64,
    drive_frequency: f64,
    drive_amplitude: f64,
    omega0: f64,
}

impl SteadyState {
    pub fn new(model: &ModelParams, rates: &BathRates) -> Result<Self> {
        if rates.gamma1() == 0.0 {
            return Err(Error::NoRelaxation);
        }
        Ok(Self {
            kappa: rates.kappa(),
            cos_2theta: model.cos_2theta(),
            sin_2theta: model.sin_2theta(),
            drive_frequency: model.drive_frequency(),
            drive_amplitude: model.drive_amplitude(),
            omega0: model.omega0(),
        })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Floquet-frame components `(0, 0, −2κ)`.
    pub fn floquet_components(&self) -> FloquetBloch {
        FloquetBloch {
            x: 0.0,
            y: 0.0,
            z: -2.0 * self.kappa,
        }
    }

    /// `Δ_ss = −2κ cos 2θ`
    pub fn population_inversion(&self) -> f64 {
        -2.0 * self.kappa * self.cos_2theta
    }

    /// `ρ_ss^{eg}(t) = −κ sin 2θ e^{−iΩt}`
    pub fn coherence(&self, t: f64) -> Complex<f64> {
        Complex::from_polar(-self.kappa * self.sin_2theta, -self.drive_frequency * t)
    }

    pub fn bloch_vector(&self, t: f64) -> Vector3<f64> {
        let (s, c) = (self.drive_frequency * t).sin_cos();
        let r = -2.0 * self.kappa * self.sin_2theta;
        Vector3::new(r * c, r * s, self.population_inversion())
    }

    /// `|n⃗_ss| = 2|κ|`
    pub fn norm(&self) -> f64 {
        2.0 * self.kappa.abs()
    }

    /// `Tr ρ_ss² = 2κ² + 1/2`
    pub fn purity(&self) -> f64 {
        2.0 * self.kappa * self.kappa + 0.5
    }

    /// `U_ss = −κ(2ε sin 2θ + ω₀ cos 2θ)`
    pub fn internal_energy(&self) -> f64 {
        -self.kappa * (2.0 * self.drive_amplitude * self.sin_2theta + self.omega0 * self.cos_2theta)
    }

    /// `ln 2 − (1/2 − |κ|) ln(1 − 2|κ|) − (1/2 + |κ|) ln(1 + 2|κ|)`
    pub fn entropy(&self) -> f64 {
        let k = self.kappa.abs();
        let term = |weight: f64, log: f64| if weight == 0.0 { 0.0 } else { weight * log };
        std::f64::consts::LN_2
            - term(0.5 - k, (-2.0 * k).ln_1p())
            - term(0.5 + k, (2.0 * k).ln_1p())
    }

    /// `cos(φ − Ωt) = −sign(κ sin 2θ)`; `None` when the coherence vanishes.
    pub fn phase_alignment(&self) -> Option<f64> {
        let r = self.kappa * self.sin_2theta;
        (r != 0.0).then(|| -r.signum())
    }
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::NonFinite { what: "time" });
    }
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    Ok(())
}
