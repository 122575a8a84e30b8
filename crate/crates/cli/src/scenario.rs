//! JSON scenario files. Frequencies and rates are in units of `ω₀`, times in `1/ω₀`.
//!
//! Every section is optional; missing values fall back to the resonant
//! reference setup (`Ω = ω₀ = 1`, `ε = 0.3`, `γ_± = 0.1, 0.05`, `γ_0 = 0.05`,
//! thermal start at `βω₀ = 1`).

use std::path::Path;

use bloch_thermo::driven::{rates_from_spectra, BathSpectrum, OhmicSpectrum};
use bloch_thermo::oracle::IntegratorConfig;
use bloch_thermo::{
    BathRates, BlochState, DrivenQubit, DrivingField, ModelParams, SpectralModel, Vector3,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Scenario {
    pub model: ModelSpec,
    pub rates: RateSpec,
    pub initial: InitialSpec,
    pub time: TimeSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ModelSpec {
    pub omega0: f64,
    /// Laser frequency `Ω`.
    pub omega: f64,
    /// Drive amplitude `ε`.
    pub epsilon: f64,
}

impl Default for ModelSpec {
    fn default() -> Self {
        Self {
            omega0: 1.0,
            omega: 1.0,
            epsilon: 0.3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case", deny_unknown_fields)]
pub enum RateSpec {
    Direct {
        gamma_plus: f64,
        gamma_minus: f64,
        gamma_zero: f64,
    },
    Spectral {
        dephasing: OhmicBathSpec,
        photon: OhmicBathSpec,
    },
}

impl Default for RateSpec {
    fn default() -> Self {
        let r = BathRates::reference();
        RateSpec::Direct {
            gamma_plus: r.gamma_plus,
            gamma_minus: r.gamma_minus,
            gamma_zero: r.gamma_zero,
        }
    }
}

/// Ohmic bath `λ`, `β`, `ω_c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OhmicBathSpec {
    pub coupling: f64,
    pub beta: f64,
    pub cutoff: f64,
}

impl OhmicBathSpec {
    fn build(&self) -> Result<BathSpectrum<OhmicSpectrum>, CliError> {
        Ok(BathSpectrum {
            coupling: self.coupling,
            spectrum: OhmicSpectrum::new(self.beta, self.cutoff)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ThermalBasis {
    /// Gibbs state of the bare atom `ω₀σ_z/2`.
    #[default]
    Bare,
    /// Gibbs state of the full `H_S(0)`, drive included.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialSpec {
    Thermal {
        beta: f64,
        #[serde(default)]
        thermal_basis: ThermalBasis,
    },
    MaximallyMixed,
    Ground,
    Bloch {
        vector: [f64; 3],
    },
}

impl Default for InitialSpec {
    fn default() -> Self {
        InitialSpec::Thermal {
            beta: 1.0,
            thermal_basis: ThermalBasis::Bare,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TimeSpec {
    pub t_end: f64,
    pub dt_output: f64,
    /// Upper limit of the net-variation integrals.
    pub t_ss: f64,
    pub dt_quadrature: f64,
    pub dt_integrator: f64,
}

impl Default for TimeSpec {
    fn default() -> Self {
        Self {
            t_end: 30.0,
            dt_output: 0.05,
            t_ss: 30.0,
            dt_quadrature: 1e-3,
            dt_integrator: 1e-3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    #[value(name = "gamma_plus")]
    GammaPlus,
    #[value(name = "gamma_zero")]
    GammaZero,
}

impl SweepParam {
    pub fn name(&self) -> &'static str {
        match self {
            SweepParam::GammaPlus => "gamma_plus",
            SweepParam::GammaZero => "gamma_zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub param: SweepParam,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.from.is_finite() && self.to.is_finite())
            || self.from < 0.0
            || self.to <= self.from
        {
            return Err(CliError::Validation(format!(
                "sweep range must satisfy 0 <= from < to, got [{}, {}]",
                self.from, self.to
            )));
        }
        if self.steps < 2 {
            return Err(CliError::Validation(format!(
                "sweep needs at least 2 steps, got {}",
                self.steps
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|k| self.from + (self.to - self.from) * k as f64 / last)
            .collect()
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let scenario: Scenario = serde_json::from_str(text)
            .map_err(|e| CliError::Validation(format!("scenario: {e}")))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Validation(msg) => CliError::Validation(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Builds every derived object once so that errors surface before any output.
    pub fn validate(&self) -> Result<(), CliError> {
        self.qubit()?;
        let t = &self.time;
        for (name, value) in [
            ("time.t_end", t.t_end),
            ("time.dt_output", t.dt_output),
            ("time.t_ss", t.t_ss),
            ("time.dt_quadrature", t.dt_quadrature),
            ("time.dt_integrator", t.dt_integrator),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(CliError::Validation(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        if let Some(sweep) = &self.sweep {
            sweep.validate()?;
        }
        Ok(())
    }

    pub fn model(&self) -> Result<ModelParams, CliError> {
        Ok(ModelParams::new(
            self.model.omega0,
            self.model.omega,
            self.model.epsilon,
        )?)
    }

    pub fn bath_rates(&self) -> Result<BathRates, CliError> {
        match self.rates {
            RateSpec::Direct {
                gamma_plus,
                gamma_minus,
                gamma_zero,
            } => Ok(BathRates::new(gamma_plus, gamma_minus, gamma_zero)?),
            RateSpec::Spectral { dephasing, photon } => {
                let spectral = self.spectral_model(&dephasing, &photon)?;
                Ok(rates_from_spectra(&self.model()?, &spectral)?.total())
            }
        }
    }

    pub fn spectral(&self) -> Result<Option<SpectralModel>, CliError> {
        match self.rates {
            RateSpec::Direct { .. } => Ok(None),
            RateSpec::Spectral { dephasing, photon } => {
                Ok(Some(self.spectral_model(&dephasing, &photon)?))
            }
        }
    }

    fn spectral_model(
        &self,
        dephasing: &OhmicBathSpec,
        photon: &OhmicBathSpec,
    ) -> Result<SpectralModel, CliError> {
        Ok(SpectralModel {
            dephasing: dephasing.build()?,
            photon: photon.build()?,
        })
    }

    pub fn initial_state(&self) -> Result<BlochState, CliError> {
        let model = self.model()?;
        match self.initial {
            InitialSpec::Thermal {
                beta,
                thermal_basis,
            } => {
                if !(beta >= 0.0 && beta.is_finite()) {
                    return Err(CliError::Validation(format!(
                        "initial.beta must be non-negative and finite, got {beta}"
                    )));
                }
                let field = match thermal_basis {
                    ThermalBasis::Bare => {
                        DrivingField::new(Vector3::new(0.0, 0.0, model.omega0() / 2.0))?
                    }
                    ThermalBasis::Full => model.field(0.0),
                };
                Ok(BlochState::thermal(&field, beta)?)
            }
            InitialSpec::MaximallyMixed => Ok(BlochState::maximally_mixed()),
            InitialSpec::Ground => Ok(BlochState::ground()),
            InitialSpec::Bloch { vector } => Ok(BlochState::new(Vector3::from(vector))?),
        }
    }

    pub fn qubit(&self) -> Result<DrivenQubit, CliError> {
        Ok(DrivenQubit::new(
            self.model()?,
            self.bath_rates()?,
            self.initial_state()?,
        ))
    }

    pub fn integrator(&self, t_end: f64) -> Result<IntegratorConfig, CliError> {
        let dt = self.time.dt_integrator;
        let every = ((self.time.dt_output / dt).round() as usize).max(1);
        Ok(IntegratorConfig::new(dt, t_end, every)?)
    }

    /// Copy with one rate replaced; only valid for direct rates.
    pub fn with_rate(&self, param: SweepParam, value: f64) -> Result<Scenario, CliError> {
        let mut next = self.clone();
        match &mut next.rates {
            RateSpec::Direct {
                gamma_plus,
                gamma_zero,
                ..
            } => match param {
                SweepParam::GammaPlus => *gamma_plus = value,
                SweepParam::GammaZero => *gamma_zero = value,
            },
            RateSpec::Spectral { .. } => {
                return Err(CliError::Validation(format!(
                    "cannot sweep {} with spectral rates",
                    param.name()
                )))
            }
        }
        next.sweep = None;
        Ok(next)
    }
}
