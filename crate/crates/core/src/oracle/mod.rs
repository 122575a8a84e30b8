//! Brute-force cross-checks: a fixed-step Runge-Kutta integrator for the
//! Floquet-frame Lindblad equation, central differences and composite
//! Simpson quadrature for net variations.

mod calculus;
mod lindblad;
mod net;

pub use calculus::{finite_difference, integrate_rate, uniform_grid};
pub use lindblad::{integrate_lindblad, lindblad_generator, OracleSample};
pub use net::{net_variation, NetVariation};

use crate::driven::{BathRates, ModelParams};
use crate::error::{Error, Result};

/// Largest allowed `dt·max(Γ1, Γ2, Ω_r, Ω)`.
pub const STABILITY_LIMIT: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Classical fourth-order Runge-Kutta.
    #[default]
    Rk4,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub dt: f64,
    pub t_end: f64,
    /// Keep every `sample_every`-th step (the final step is always kept).
    pub sample_every: usize,
    pub method: Method,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            dt: 1e-3,
            t_end: 30.0,
            sample_every: 1,
            method: Method::Rk4,
        }
    }
}

impl IntegratorConfig {
    pub fn new(dt: f64, t_end: f64, sample_every: usize) -> Result<Self> {
        let cfg = Self {
            dt,
            t_end,
            sample_every,
            method: Method::Rk4,
        };
        cfg.check_grid()?;
        Ok(cfg)
    }

    fn check_grid(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "dt",
                value: self.dt,
                reason: "step must be positive and finite",
            });
        }
        if !(self.t_end >= 0.0 && self.t_end.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "t_end",
                value: self.t_end,
                reason: "horizon must be non-negative and finite",
            });
        }
        if self.sample_every == 0 {
            return Err(Error::Grid("sample_every must be at least 1".into()));
        }
        Ok(())
    }

    /// Number of steps, rounding `t_end/dt` to the nearest integer.
    pub fn steps(&self) -> usize {
        (self.t_end / self.dt).round() as usize
    }

    /// Checks the grid and `dt·max(Γ1, Γ2, Ω_r, Ω) < 0.1`.
    pub fn validate(&self, model: &ModelParams, rates: &BathRates) -> Result<()> {
        self.check_grid()?;
        let fastest = [
            rates.gamma1(),
            rates.gamma2(),
            model.rabi_frequency(),
            model.drive_frequency().abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        let product = self.dt * fastest;
        if product < STABILITY_LIMIT {
            Ok(())
        } else {
            Err(Error::StabilityGuard { product })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stability_guard() {
        let m = ModelParams::reference();
        let r = BathRates::reference();
        assert!(IntegratorConfig::default().validate(&m, &r).is_ok());
        let coarse = IntegratorConfig::new(0.2, 30.0, 1).unwrap();
        assert!(matches!(
            coarse.validate(&m, &r),
            Err(Error::StabilityGuard { product }) if (product - 0.2).abs() < 1e-15
        ));
        assert!(IntegratorConfig::new(0.0, 1.0, 1).is_err());
        assert!(IntegratorConfig::new(1e-3, 1.0, 0).is_err());
    }
}
