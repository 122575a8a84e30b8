use super::calculus::{integrate_rate, uniform_grid};
use crate::error::Result;
use crate::first_law::{self, FirstLawRates, HeatWork, IrreversibleEntropy, TrajectoryPoint};

/// Rates integrated from `t = 0` to `t_ss`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetVariation {
    pub t_ss: f64,
    pub energy: f64,
    pub conventional: HeatWork,
    pub hamiltonian_based: HeatWork,
    pub entropy_based: HeatWork,
    pub entropy: f64,
    pub irreversible: IrreversibleEntropy,
}

impl NetVariation {
    /// Largest `|ΔU − (ΔW + ΔQ)|` over the three decompositions.
    pub fn closure_error(&self) -> f64 {
        [
            self.conventional,
            self.hamiltonian_based,
            self.entropy_based,
        ]
        .iter()
        .map(|hw| (self.energy - hw.total()).abs())
        .fold(0.0, f64::max)
    }
}

/// Evaluates every first-law rate of `point` on a uniform grid of step
/// at most `dt` over `[0, t_ss]` and integrates with Simpson's rule.
///
/// Non-finite rates (pure states) propagate into the affected fields.
pub fn net_variation<F>(point: F, t_ss: f64, dt: f64) -> Result<NetVariation>
where
    F: Fn(f64) -> Result<TrajectoryPoint>,
{
    let times = uniform_grid(t_ss, dt)?;
    let rates = times
        .iter()
        .map(|&t| first_law::evaluate(&point(t)?))
        .collect::<Result<Vec<FirstLawRates>>>()?;
    let integrate = |f: fn(&FirstLawRates) -> f64| -> Result<f64> {
        let series: Vec<f64> = rates.iter().map(f).collect();
        integrate_rate(&times, &series)
    };
    Ok(NetVariation {
        t_ss,
        energy: integrate(|r| r.energy)?,
        conventional: HeatWork {
            work: integrate(|r| r.conventional.work)?,
            heat: integrate(|r| r.conventional.heat)?,
        },
        hamiltonian_based: HeatWork {
            work: integrate(|r| r.hamiltonian_based.work)?,
            heat: integrate(|r| r.hamiltonian_based.heat)?,
        },
        entropy_based: HeatWork {
            work: integrate(|r| r.entropy_based.work)?,
            heat: integrate(|r| r.entropy_based.heat)?,
        },
        entropy: integrate(|r| r.entropy)?,
        irreversible: IrreversibleEntropy {
            conventional: integrate(|r| r.irreversible.conventional)?,
            hamiltonian_based: integrate(|r| r.irreversible.hamiltonian_based)?,
            entropy_based: integrate(|r| r.irreversible.entropy_based)?,
        },
    })
}
