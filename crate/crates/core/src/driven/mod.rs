//! Laser-driven two-level atom coupled to a dephasing (`z`) bath and a photon
//! (`x`) bath, solved in closed form through its Floquet decomposition.
//!
//! The Hamiltonian is `H_S(t) = (ω₀/2)σ_z + ε(e^{iΩt}σ_− + e^{−iΩt}σ_+)`,
//! i.e. `h⃗_t = (ε cos Ωt, ε sin Ωt, ω₀/2)`. Its propagator factorises as
//! `U_S(t) = P_t e^{−iH̄t}` with `P_t = e^{−itΩσ_z/2}` and the time-independent
//! `H̄ = (δ/2)σ_z + εσ_x`, `δ = ω₀ − Ω`. The eigenbasis of `H̄`
//! (the Floquet basis) is rotated from the atom basis by the mixing angle
//! `θ`, `cos 2θ = δ/Ω_r`, `sin 2θ = 2ε/Ω_r`, `Ω_r = √(4ε² + δ²)`.

mod fourier;
mod solution;
mod spectral;

pub use fourier::{Bath, FourierTable};
pub use solution::{DrivenQubit, FloquetBloch, SteadyState};
pub use spectral::{
    explicit_decay_constants, rates_from_spectra, BathSpectrum, ChannelRates, DecayConstants,
    OhmicSpectrum, SpectralFunction, SpectralModel, SpectralRates,
};

use nalgebra::{Complex, Matrix2, Vector3};

use crate::bloch::{BlochState, DrivingField};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat2, C64};

/// Atom and laser parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    omega0: f64,
    drive_frequency: f64,
    drive_amplitude: f64,
}

impl ModelParams {
    /// `omega0`: atomic transition frequency, `drive_frequency`: laser
    /// frequency `Ω`, `drive_amplitude`: `ε ≥ 0`.
    pub fn new(omega0: f64, drive_frequency: f64, drive_amplitude: f64) -> Result<Self> {
        check_finite("omega0", omega0)?;
        check_finite("omega", drive_frequency)?;
        check_finite("epsilon", drive_amplitude)?;
        if omega0 <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "omega0",
                value: omega0,
                reason: "must be positive",
            });
        }
        if drive_amplitude < 0.0 {
            return Err(Error::InvalidParameter {
                name: "epsilon",
                value: drive_amplitude,
                reason: "must be non-negative",
            });
        }
        Ok(Self {
            omega0,
            drive_frequency,
            drive_amplitude,
        })
    }

    /// Resonant reference drive: `ω₀ = Ω = 1`, `ε = 0.3`.
    pub fn reference() -> Self {
        Self {
            omega0: 1.0,
            drive_frequency: 1.0,
            drive_amplitude: 0.3,
        }
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn drive_frequency(&self) -> f64 {
        self.drive_frequency
    }

    pub fn drive_amplitude(&self) -> f64 {
        self.drive_amplitude
    }

    /// `δ = ω₀ − Ω`
    pub fn detuning(&self) -> f64 {
        self.omega0 - self.drive_frequency
    }

    /// `Ω_r = √(4ε² + δ²)`
    pub fn rabi_frequency(&self) -> f64 {
        (2.0 * self.drive_amplitude).hypot(self.detuning())
    }

    /// Floquet mixing angle `θ = atan2(2ε, δ)/2`.
    pub fn mixing_angle(&self) -> f64 {
        (2.0 * self.drive_amplitude).atan2(self.detuning()) / 2.0
    }

    pub fn cos_2theta(&self) -> f64 {
        (2.0 * self.mixing_angle()).cos()
    }

    pub fn sin_2theta(&self) -> f64 {
        (2.0 * self.mixing_angle()).sin()
    }

    /// `h⃗_t = (ε cos Ωt, ε sin Ωt, ω₀/2)`
    pub fn field_vector(&self, t: f64) -> Vector3<f64> {
        let (s, c) = (self.drive_frequency * t).sin_cos();
        Vector3::new(
            self.drive_amplitude * c,
            self.drive_amplitude * s,
            self.omega0 / 2.0,
        )
    }

    pub fn field(&self, t: f64) -> DrivingField {
        DrivingField::new(self.field_vector(t)).expect("finite parameters give a finite field")
    }

    /// `ḣ⃗_t = εΩ(−sin Ωt, cos Ωt, 0)`
    pub fn field_rate(&self, t: f64) -> Vector3<f64> {
        let (s, c) = (self.drive_frequency * t).sin_cos();
        self.drive_amplitude * self.drive_frequency * Vector3::new(-s, c, 0.0)
    }

    /// `H_S(t)` as a matrix in the atom basis.
    pub fn hamiltonian(&self, t: f64) -> Mat2 {
        linalg::pauli_dot(&self.field_vector(t))
    }

    /// `H̄ = (δ/2)σ_z + εσ_x`
    pub fn average_hamiltonian(&self) -> Mat2 {
        linalg::pauli_dot(&self.average_field())
    }

    fn average_field(&self) -> Vector3<f64> {
        Vector3::new(self.drive_amplitude, 0.0, self.detuning() / 2.0)
    }

    /// `P_t = e^{−itΩσ_z/2}`
    pub fn micromotion(&self, t: f64) -> Mat2 {
        let phase = Complex::from_polar(1.0, -self.drive_frequency * t / 2.0);
        Matrix2::new(phase, C64::from(0.0), C64::from(0.0), phase.conj())
    }

    /// `U_S(t) = P_t e^{−iH̄t}`
    pub fn propagator(&self, t: f64) -> Mat2 {
        self.micromotion(t) * linalg::su2_exp(&self.average_field(), t)
    }

    /// Columns are `|ē⟩ = cos θ|e⟩ + sin θ|g⟩` and `|ḡ⟩ = −sin θ|e⟩ + cos θ|g⟩`.
    pub fn floquet_basis(&self) -> Mat2 {
        let (s, c) = self.mixing_angle().sin_cos();
        Matrix2::new(c, -s, s, c).map(C64::from)
    }

    /// `[σ̄_−, σ̄_0, σ̄_+]` with `σ̄_+ = |ē⟩⟨ḡ|`, `σ̄_0 = |ē⟩⟨ē| − |ḡ⟩⟨ḡ|`,
    /// expressed in the atom basis.
    pub fn floquet_operators(&self) -> [Mat2; 3] {
        let basis = self.floquet_basis();
        let rotate = |op: Mat2| basis * op * basis.adjoint();
        [
            rotate(linalg::lowering()),
            rotate(linalg::pauli_z()),
            rotate(linalg::raising()),
        ]
    }
}

/// Floquet-frame transition rates `γ_+`, `γ_−`, `γ_0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathRates {
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub gamma_zero: f64,
}

impl BathRates {
    pub fn new(gamma_plus: f64, gamma_minus: f64, gamma_zero: f64) -> Result<Self> {
        for (name, value) in [
            ("gamma_plus", gamma_plus),
            ("gamma_minus", gamma_minus),
            ("gamma_zero", gamma_zero),
        ] {
            check_finite(name, value)?;
            if value < 0.0 {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "rates must be non-negative",
                });
            }
        }
        Ok(Self {
            gamma_plus,
            gamma_minus,
            gamma_zero,
        })
    }

    /// Reference rates: `γ_+ = 0.1`, `γ_− = 0.05`, `γ_0 = 0.05`.
    pub fn reference() -> Self {
        Self {
            gamma_plus: 0.1,
            gamma_minus: 0.05,
            gamma_zero: 0.05,
        }
    }

    pub fn closed() -> Self {
        Self {
            gamma_plus: 0.0,
            gamma_minus: 0.0,
            gamma_zero: 0.0,
        }
    }

    /// `Γ1 = γ_+ + γ_−`
    pub fn gamma1(&self) -> f64 {
        self.gamma_plus + self.gamma_minus
    }

    /// `Γ2 = Γ1/2 + 2γ_0`
    pub fn gamma2(&self) -> f64 {
        self.gamma1() / 2.0 + 2.0 * self.gamma_zero
    }

    /// `κ = (γ_− − γ_+)/(2(γ_− + γ_+))`, taken as 0 when `Γ1 = 0`.
    pub fn kappa(&self) -> f64 {
        let g1 = self.gamma1();
        if g1 == 0.0 {
            0.0
        } else {
            (self.gamma_minus - self.gamma_plus) / (2.0 * g1)
        }
    }
}

/// Initial state with its Floquet-frame coordinates precomputed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState {
    state: BlochState,
    floquet_inversion: f64,
    floquet_coherence: C64,
}

impl InitialState {
    pub fn new(model: &ModelParams, state: BlochState) -> Self {
        let (c, s) = (model.cos_2theta(), model.sin_2theta());
        let delta = state.population_inversion();
        let coherence = state.coherence();
        Self {
            state,
            floquet_inversion: delta * c + 2.0 * coherence.re * s,
            floquet_coherence: Complex::new(-delta / 2.0 * s + coherence.re * c, coherence.im),
        }
    }

    pub fn state(&self) -> BlochState {
        self.state
    }

    /// `Δ̄₀ = Δ₀ cos 2θ + 2 Re ρ₀^{eg} sin 2θ`
    pub fn floquet_inversion(&self) -> f64 {
        self.floquet_inversion
    }

    /// `ρ̄₀^{eg} = −(Δ₀/2) sin 2θ + Re ρ₀^{eg} cos 2θ + i Im ρ₀^{eg}`
    pub fn floquet_coherence(&self) -> C64 {
        self.floquet_coherence
    }
}

fn check_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite",
        })
    }
}
