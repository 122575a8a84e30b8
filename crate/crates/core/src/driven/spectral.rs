//! Floquet-frame rates from bath correlation spectra.
//!
//! Each bath `j` enters through `G_j(ω)`, the Fourier transform of its
//! correlation function, which satisfies detailed balance
//! `G_j(−ω) = e^{−β_j ω} G_j(ω)`. The rates are
//! `γ_q^{(j)} = λ_j² Σ_p (s_{q,p}^{(j)})² G_j(−qΩ_r − pΩ)`.

use super::fourier::{Bath, FourierTable};
use super::{BathRates, ModelParams};
use crate::error::{Error, Result};

/// Bath correlation spectrum `G(ω)`, without the coupling strength.
pub trait SpectralFunction {
    fn correlation(&self, omega: f64) -> f64;
}

impl<F> SpectralFunction for F
where
    F: Fn(f64) -> f64,
{
    fn correlation(&self, omega: f64) -> f64 {
        self(omega)
    }
}

/// Thermal Ohmic bath with exponential cutoff:
/// `G(ω) = J(ω)(N(ω) + 1)`, `G(−ω) = J(ω)N(ω)` for `ω > 0`, with
/// `J(ω) = ω e^{−ω/ω_c}` and Bose occupation `N`. `G(0) = 1/β` is the limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OhmicSpectrum {
    inverse_temperature: f64,
    cutoff: f64,
}

impl OhmicSpectrum {
    pub fn new(inverse_temperature: f64, cutoff: f64) -> Result<Self> {
        if !(inverse_temperature > 0.0 && inverse_temperature.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: inverse_temperature,
                reason: "inverse temperature must be positive and finite",
            });
        }
        if !(cutoff > 0.0 && cutoff.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "cutoff",
                value: cutoff,
                reason: "cutoff frequency must be positive and finite",
            });
        }
        Ok(Self {
            inverse_temperature,
            cutoff,
        })
    }

    pub fn inverse_temperature(&self) -> f64 {
        self.inverse_temperature
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn spectral_density(&self, omega: f64) -> f64 {
        omega * (-omega / self.cutoff).exp()
    }
}

impl SpectralFunction for OhmicSpectrum {
    fn correlation(&self, omega: f64) -> f64 {
        if omega == 0.0 {
            return 1.0 / self.inverse_temperature;
        }
        let w = omega.abs();
        let occupation = 1.0 / (self.inverse_temperature * w).exp_m1();
        let emission = if omega > 0.0 { 1.0 } else { 0.0 };
        self.spectral_density(w) * (occupation + emission)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpectrum<S> {
    /// Global coupling strength `λ_j`.
    pub coupling: f64,
    pub spectrum: S,
}

/// Both baths of the driven atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralModel<S = OhmicSpectrum> {
    pub dephasing: BathSpectrum<S>,
    pub photon: BathSpectrum<S>,
}

impl<S: SpectralFunction> SpectralModel<S> {
    fn bath(&self, bath: Bath) -> &BathSpectrum<S> {
        match bath {
            Bath::Dephasing => &self.dephasing,
            Bath::Photon => &self.photon,
        }
    }

    fn correlation(&self, bath: Bath, omega: f64) -> Result<f64> {
        let value = self.bath(bath).spectrum.correlation(omega);
        if value.is_finite() && value >= 0.0 {
            Ok(value)
        } else {
            Err(Error::InvalidSpectrum {
                frequency: omega,
                value,
            })
        }
    }

    /// `g_{j,±}(ω) = G_j(ω) ± G_j(−ω)`
    fn symmetric(&self, bath: Bath, omega: f64) -> Result<f64> {
        Ok(self.correlation(bath, omega)? + self.correlation(bath, -omega)?)
    }

    fn antisymmetric(&self, bath: Bath, omega: f64) -> Result<f64> {
        Ok(self.correlation(bath, omega)? - self.correlation(bath, -omega)?)
    }
}

/// `(γ_+, γ_−, γ_0)` contributed by one bath.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ChannelRates {
    pub plus: f64,
    pub minus: f64,
    pub zero: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralRates {
    pub dephasing: ChannelRates,
    pub photon: ChannelRates,
}

impl SpectralRates {
    /// `γ_q = γ_q^{(x)} + γ_q^{(z)}`
    pub fn total(&self) -> BathRates {
        BathRates {
            gamma_plus: self.dephasing.plus + self.photon.plus,
            gamma_minus: self.dephasing.minus + self.photon.minus,
            gamma_zero: self.dephasing.zero + self.photon.zero,
        }
    }
}

/// `Γ1`, `Γ2`, `κ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayConstants {
    pub gamma1: f64,
    pub gamma2: f64,
    pub kappa: f64,
}

impl From<BathRates> for DecayConstants {
    fn from(rates: BathRates) -> Self {
        Self {
            gamma1: rates.gamma1(),
            gamma2: rates.gamma2(),
            kappa: rates.kappa(),
        }
    }
}

/// Sums `λ_j² (s_{q,p}^{(j)})² G_j(−qΩ_r − pΩ)` over the Fourier table.
///
/// The dephasing bath has no zero-frequency channel: `γ_0^{(z)} = 0`.
pub fn rates_from_spectra<S: SpectralFunction>(
    model: &ModelParams,
    spectral: &SpectralModel<S>,
) -> Result<SpectralRates> {
    let table = FourierTable::new(model);
    let omega_r = model.rabi_frequency();
    let omega = model.drive_frequency();
    let channel = |bath: Bath| -> Result<ChannelRates> {
        let coupling2 = spectral.bath(bath).coupling.powi(2);
        let mut rates = ChannelRates::default();
        for (q, p, s) in table.terms(bath) {
            if bath == Bath::Dephasing && q == 0 {
                continue;
            }
            let frequency = -(q as f64) * omega_r - p as f64 * omega;
            let contribution = coupling2 * s * s * spectral.correlation(bath, frequency)?;
            match q {
                1 => rates.plus += contribution,
                -1 => rates.minus += contribution,
                _ => rates.zero += contribution,
            }
        }
        Ok(rates)
    };
    Ok(SpectralRates {
        dephasing: channel(Bath::Dephasing)?,
        photon: channel(Bath::Photon)?,
    })
}

/// `Γ1`, `Γ2`, `κ` written directly in the atom and laser parameters,
/// with `Ω_± = Ω ± Ω_r`.
pub fn explicit_decay_constants<S: SpectralFunction>(
    model: &ModelParams,
    spectral: &SpectralModel<S>,
) -> Result<DecayConstants> {
    let omega_r = model.rabi_frequency();
    if omega_r == 0.0 {
        return Err(Error::InvalidParameter {
            name: "rabi_frequency",
            value: omega_r,
            reason: "explicit rates need a nonzero Rabi frequency",
        });
    }
    let omega0 = model.omega0();
    let omega = model.drive_frequency();
    let eps4_sq = (4.0 * model.drive_amplitude()).powi(2);
    let (omega_plus, omega_minus) = (omega + omega_r, omega - omega_r);
    let lz2 = spectral.dephasing.coupling.powi(2);
    let lx2 = spectral.photon.coupling.powi(2);
    let w_plus = (omega0 - omega_minus).powi(2);
    let w_minus = (omega0 - omega_plus).powi(2);
    let r2 = omega_r * omega_r;

    let photon_sym = lx2 * w_plus * spectral.symmetric(Bath::Photon, omega_plus)?
        + lx2 * w_minus * spectral.symmetric(Bath::Photon, omega_minus)?;
    let dephasing_sym = lz2 * spectral.symmetric(Bath::Dephasing, omega_r)?;

    let gamma1 = (eps4_sq * dephasing_sym + photon_sym) / (4.0 * r2);
    let gamma2 = (photon_sym
        + eps4_sq * (lx2 * spectral.symmetric(Bath::Photon, omega)? + dephasing_sym))
        / (8.0 * r2);
    let kappa = if gamma1 == 0.0 {
        0.0
    } else {
        (lx2 * w_plus * spectral.antisymmetric(Bath::Photon, omega_plus)?
            - lx2 * w_minus * spectral.antisymmetric(Bath::Photon, omega_minus)?
            + lz2 * eps4_sq * spectral.antisymmetric(Bath::Dephasing, omega_r)?)
            / (8.0 * r2 * gamma1)
    };
    Ok(DecayConstants {
        gamma1,
        gamma2,
        kappa,
    })
}
