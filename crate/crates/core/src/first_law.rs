//! Heat/work decompositions of `dU/dt` and the associated entropy balance.
//!
//! All quantities are rates at a single instant, computed from the state
//! `n⃗`, field `h⃗` and their time derivatives. The derivatives are inputs:
//! analytic sources supply them exactly, generic trajectories can use
//! [`crate::oracle::finite_difference`].
//!
//! Positive heat means energy flowing into the system.

use nalgebra::Vector3;

use crate::bloch::{self, BlochState, DrivingField};
use crate::error::{Error, Result};

/// One instant of a trajectory together with its tangent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub t: f64,
    pub state: BlochState,
    pub field: DrivingField,
    /// `dn⃗/dt`
    pub state_rate: Vector3<f64>,
    /// `dh⃗/dt`
    pub field_rate: Vector3<f64>,
}

/// Work and heat rates of one decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatWork {
    pub work: f64,
    pub heat: f64,
}

impl HeatWork {
    pub fn total(&self) -> f64 {
        self.work + self.heat
    }
}

/// `dS_i/dt = dS/dt − β dQ/dt`, one value per decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrreversibleEntropy {
    pub conventional: f64,
    pub hamiltonian_based: f64,
    pub entropy_based: f64,
}

/// Every first-law rate at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstLawRates {
    pub energy: f64,
    pub conventional: HeatWork,
    pub hamiltonian_based: HeatWork,
    pub entropy_based: HeatWork,
    pub entropy: f64,
    pub inverse_temperature: f64,
    pub irreversible: IrreversibleEntropy,
}

impl FirstLawRates {
    /// Largest `|dU − (dW + dQ)|` over the three decompositions.
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

impl TrajectoryPoint {
    /// `dU/dt = ḣ⃗·n⃗ + h⃗·ṅ⃗`
    pub fn energy_rate(&self) -> f64 {
        self.field_rate.dot(&self.state.vector()) + self.field.vector().dot(&self.state_rate)
    }

    /// Direction `n̂` used by the rate formulas. At the maximally mixed
    /// point the one-sided limit `ṅ⃗/|ṅ⃗|` is taken; `None` if the state is
    /// also stationary.
    pub fn state_direction(&self) -> Option<Vector3<f64>> {
        self.state.unit().or_else(|| {
            let speed = self.state_rate.norm();
            (speed > 0.0).then(|| self.state_rate / speed)
        })
    }

    /// `ṅ = n̂·ṅ⃗`
    pub fn norm_rate(&self) -> f64 {
        self.state_direction()
            .map_or(0.0, |n_hat| n_hat.dot(&self.state_rate))
    }

    /// `dn̂/dt = (ṅ⃗ − ṅ n̂)/n`; zero below the degenerate norm.
    pub fn direction_rate(&self) -> Vector3<f64> {
        let n = self.state.vector().norm();
        match self.state.unit() {
            Some(n_hat) => (self.state_rate - n_hat.dot(&self.state_rate) * n_hat) / n,
            None => Vector3::zeros(),
        }
    }

    /// `ḣ = ĥ·ḣ⃗`
    pub fn field_norm_rate(&self) -> f64 {
        self.field.unit().dot(&self.field_rate)
    }

    /// `h n ĥ·dn̂/dt`, the part of the conventional heat the entropy-based
    /// decomposition books as work.
    pub fn dissipative_work(&self) -> f64 {
        self.field.norm()
            * self.state.vector().norm()
            * self.field.unit().dot(&self.direction_rate())
    }

    fn require_field(&self) -> Result<()> {
        if self.field.norm() > 0.0 {
            Ok(())
        } else {
            Err(Error::DegenerateField)
        }
    }
}

/// Weak-coupling decomposition: `dW = ḣ⃗·n⃗`, `dQ = h⃗·ṅ⃗`.
pub fn conventional_rates(p: &TrajectoryPoint) -> HeatWork {
    HeatWork {
        work: p.field_rate.dot(&p.state.vector()),
        heat: p.field.vector().dot(&p.state_rate),
    }
}

/// Work from the eigen-energies: `dw = ḣ n cos α`,
/// `dq = h (ṅ⃗·ĥ + n⃗·dĥ/dt)`.
pub fn hamiltonian_based_rates(p: &TrajectoryPoint) -> Result<HeatWork> {
    p.require_field()?;
    let h = p.field.norm();
    let h_hat = p.field.unit();
    let h_dot = p.field_norm_rate();
    let n = p.state.vector();
    let h_hat_rate = (p.field_rate - h_dot * h_hat) / h;
    Ok(HeatWork {
        work: h_dot * n.dot(&h_hat),
        heat: h * (p.state_rate.dot(&h_hat) + n.dot(&h_hat_rate)),
    })
}

/// Heat from the state eigenvalues: `dQ = ṅ h cos α`, `dW = dU − dQ`.
pub fn entropy_based_rates(p: &TrajectoryPoint) -> HeatWork {
    let heat = p
        .state_direction()
        .map_or(0.0, |n_hat| p.norm_rate() * p.field.vector().dot(&n_hat));
    HeatWork {
        work: p.energy_rate() - heat,
        heat,
    }
}

/// `dS/dt = (ṅ/2) ln((1 − n)/(1 + n)) = −ṅ artanh n`.
///
/// Diverges for pure states: returns `±∞` (or NaN when `ṅ = 0`) at `n = 1`.
pub fn entropy_rate(p: &TrajectoryPoint) -> f64 {
    let rate = p.norm_rate();
    if rate == 0.0 {
        return if p.state.norm() < 1.0 { 0.0 } else { f64::NAN };
    }
    -rate * p.state.norm().atanh()
}

/// Nonequilibrium inverse temperature `β = (cos α/2h) ln((1 − n)/(1 + n))`.
///
/// Zero at the maximally mixed point, non-finite for pure states.
pub fn inverse_temperature(p: &TrajectoryPoint) -> Result<f64> {
    p.require_field()?;
    let alignment = bloch::cos_alpha(&p.state, &p.field);
    if alignment.degenerate {
        return Ok(0.0);
    }
    Ok(-alignment.cos_alpha * p.state.norm().atanh() / p.field.norm())
}

/// `dS/dt − β dQ/dt` for the conventional, Hamiltonian-based and
/// entropy-based heats.
pub fn irreversible_entropy_rates(p: &TrajectoryPoint) -> Result<IrreversibleEntropy> {
    let ds = entropy_rate(p);
    let beta = inverse_temperature(p)?;
    Ok(IrreversibleEntropy {
        conventional: ds - beta * conventional_rates(p).heat,
        hamiltonian_based: ds - beta * hamiltonian_based_rates(p)?.heat,
        entropy_based: ds - beta * entropy_based_rates(p).heat,
    })
}

/// Entropy-based irreversible entropy in closed form,
/// `(ṅ/2) sin²α ln((1 − n)/(1 + n))`.
pub fn entropy_based_irreversible_closed_form(p: &TrajectoryPoint) -> f64 {
    let rate = p.norm_rate();
    if rate == 0.0 {
        return 0.0;
    }
    let sin2 = match p.state.unit() {
        Some(n_hat) if p.field.norm() > 0.0 => n_hat.cross(&p.field.unit()).norm_squared(),
        _ => 1.0,
    };
    -rate * sin2 * p.state.norm().atanh()
}

pub fn evaluate(p: &TrajectoryPoint) -> Result<FirstLawRates> {
    let hamiltonian_based = hamiltonian_based_rates(p)?;
    let conventional = conventional_rates(p);
    let entropy_based = entropy_based_rates(p);
    let entropy = entropy_rate(p);
    let beta = inverse_temperature(p)?;
    Ok(FirstLawRates {
        energy: p.energy_rate(),
        conventional,
        hamiltonian_based,
        entropy_based,
        entropy,
        inverse_temperature: beta,
        irreversible: IrreversibleEntropy {
            conventional: entropy - beta * conventional.heat,
            hamiltonian_based: entropy - beta * hamiltonian_based.heat,
            entropy_based: entropy - beta * entropy_based.heat,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn point(n: [f64; 3], dn: [f64; 3], h: [f64; 3], dh: [f64; 3]) -> TrajectoryPoint {
        TrajectoryPoint {
            t: 0.0,
            state: BlochState::new(Vector3::from(n)).unwrap(),
            field: DrivingField::new(Vector3::from(h)).unwrap(),
            state_rate: Vector3::from(dn),
            field_rate: Vector3::from(dh),
        }
    }

    #[test]
    fn static_hamiltonian_does_no_conventional_work() {
        let p = point(
            [0.2, 0.1, -0.4],
            [0.3, -0.2, 0.1],
            [0.3, 0.0, 0.5],
            [0.0; 3],
        );
        assert_eq!(conventional_rates(&p).work, 0.0);
    }

    #[test]
    fn maximally_mixed_state_does_no_conventional_work() {
        let p = point([0.0; 3], [0.3, -0.2, 0.1], [0.3, 0.0, 0.5], [1.0, 2.0, 3.0]);
        assert_eq!(conventional_rates(&p).work, 0.0);
    }

    #[test]
    fn constant_field_norm_means_no_hamiltonian_work() {
        // circular drive: ḣ⃗ ⊥ h⃗
        let p = point(
            [0.2, 0.1, -0.4],
            [0.3, -0.2, 0.1],
            [0.3, 0.0, 0.5],
            [0.0, 0.3, 0.0],
        );
        assert_abs_diff_eq!(hamiltonian_based_rates(&p).unwrap().work, 0.0);
    }

    #[test]
    fn frozen_point_has_no_hamiltonian_heat() {
        let p = point([0.2, 0.1, -0.4], [0.0; 3], [0.3, 0.0, 0.5], [0.0; 3]);
        assert_eq!(hamiltonian_based_rates(&p).unwrap().heat, 0.0);
    }

    #[test]
    fn zero_field_is_an_error() {
        let p = point([0.2, 0.1, -0.4], [0.1; 3], [0.0; 3], [0.0; 3]);
        assert_eq!(hamiltonian_based_rates(&p), Err(Error::DegenerateField));
        assert_eq!(inverse_temperature(&p), Err(Error::DegenerateField));
        assert!(evaluate(&p).is_err());
    }

    #[test]
    fn norm_preserving_motion_has_no_entropy_heat() {
        // ṅ⃗ ⊥ n⃗
        let p = point(
            [0.0, 0.0, 0.5],
            [0.2, -0.1, 0.0],
            [0.3, 0.1, 0.5],
            [0.0, 0.3, 0.1],
        );
        let eb = entropy_based_rates(&p);
        assert_abs_diff_eq!(eb.heat, 0.0);
        assert_abs_diff_eq!(eb.work, p.energy_rate());
        assert_abs_diff_eq!(entropy_rate(&p), 0.0);
    }

    #[test]
    fn constant_angle_makes_hb_and_eb_coincide() {
        // n⃗ and h⃗ rotate rigidly together about z: α̇ = 0
        let omega = 0.7;
        let n = Vector3::new(0.2, 0.0, 0.1);
        let h = Vector3::new(0.3, 0.0, 0.5);
        let z = Vector3::z();
        // add a radial shrink of n to make heat nonzero
        let p = point(
            n.into(),
            (omega * z.cross(&n) - 0.05 * n).into(),
            h.into(),
            (omega * z.cross(&h)).into(),
        );
        assert_abs_diff_eq!(
            hamiltonian_based_rates(&p).unwrap().heat,
            entropy_based_rates(&p).heat,
            epsilon = 1e-14
        );
        let irr = irreversible_entropy_rates(&p).unwrap();
        assert_abs_diff_eq!(irr.hamiltonian_based, irr.entropy_based, epsilon = 1e-14);
    }

    #[test]
    fn entropy_rate_limits() {
        let still = point([0.3, 0.0, 0.0], [0.0; 3], [0.0, 0.0, 1.0], [0.0; 3]);
        assert_eq!(entropy_rate(&still), 0.0);

        let tiny = 1e-8;
        let near_mixed = point([tiny, 0.0, 0.0], [0.5, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0; 3]);
        assert_abs_diff_eq!(entropy_rate(&near_mixed), -0.5 * tiny, epsilon = 1e-20);

        let pure = point([0.0, 0.0, -1.0], [0.0, 0.0, 0.1], [0.0, 0.0, 1.0], [0.0; 3]);
        assert!(entropy_rate(&pure).is_infinite());
        assert!(entropy_rate(&pure) > 0.0);
        assert!(!inverse_temperature(&pure).unwrap().is_finite());
        let pure_still = point([0.0, 0.0, -1.0], [0.0; 3], [0.0, 0.0, 1.0], [0.0; 3]);
        assert!(entropy_rate(&pure_still).is_nan());
    }

    #[test]
    fn inverse_temperature_special_cases() {
        let mixed = point([0.0; 3], [0.1, 0.0, 0.0], [0.3, 0.0, 0.5], [0.0; 3]);
        assert_eq!(inverse_temperature(&mixed).unwrap(), 0.0);
        let orthogonal = point([0.5, 0.0, 0.0], [0.0; 3], [0.0, 0.0, 0.5], [0.0; 3]);
        assert_eq!(inverse_temperature(&orthogonal).unwrap(), 0.0);
        // Gibbs state of H = h σ_z at β: n = −tanh(βh)
        let beta: f64 = 1.3;
        let h = 0.7;
        let gibbs = point(
            [0.0, 0.0, -(beta * h).tanh()],
            [0.0; 3],
            [0.0, 0.0, h],
            [0.0; 3],
        );
        assert_abs_diff_eq!(inverse_temperature(&gibbs).unwrap(), beta, epsilon = 1e-14);
    }

    #[test]
    fn zero_temperature_instant_makes_irreversible_entropy_equal_entropy() {
        let p = point(
            [0.4, 0.0, 0.0],
            [-0.1, 0.2, 0.05],
            [0.0, 0.0, 0.5],
            [0.0, 0.1, 0.0],
        );
        assert_eq!(inverse_temperature(&p).unwrap(), 0.0);
        let ds = entropy_rate(&p);
        let irr = irreversible_entropy_rates(&p).unwrap();
        assert_eq!(irr.conventional, ds);
        assert_eq!(irr.hamiltonian_based, ds);
        assert_eq!(irr.entropy_based, ds);
    }

    #[test]
    fn maximally_mixed_limit_uses_velocity_direction() {
        let p = point(
            [0.0; 3],
            [0.1, -0.2, 0.3],
            [0.3, 0.1, 0.5],
            [0.0, 0.3, -0.1],
        );
        let eb = entropy_based_rates(&p);
        assert_abs_diff_eq!(eb.heat, conventional_rates(&p).heat, epsilon = 1e-15);
        assert_eq!(entropy_based_irreversible_closed_form(&p), 0.0);
        let still = point([0.0; 3], [0.0; 3], [0.3, 0.1, 0.5], [0.0, 0.3, -0.1]);
        assert_eq!(entropy_based_rates(&still).heat, 0.0);
    }

    fn ball_point() -> impl Strategy<Value = [f64; 3]> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, 0.0..0.999f64).prop_filter_map(
            "nonzero direction",
            |(x, y, z, r)| {
                let v = Vector3::new(x, y, z);
                (v.norm() > 1e-3).then(|| (v / v.norm() * r).into())
            },
        )
    }

    fn vec3(bound: f64) -> impl Strategy<Value = [f64; 3]> {
        [-bound..bound, -bound..bound, -bound..bound]
    }

    fn field3() -> impl Strategy<Value = [f64; 3]> {
        vec3(2.0).prop_filter("nonzero", |v| Vector3::from(*v).norm() > 1e-3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn first_law_closes(n in ball_point(), dn in vec3(1.0), h in field3(), dh in vec3(1.0)) {
            let rates = evaluate(&point(n, dn, h, dh)).unwrap();
            prop_assert!(rates.closure_error() < 1e-10);
        }

        #[test]
        fn entropy_based_identity(n in ball_point(), dn in vec3(1.0), h in field3(), dh in vec3(1.0)) {
            let p = point(n, dn, h, dh);
            let gap = conventional_rates(&p).heat - entropy_based_rates(&p).heat - p.dissipative_work();
            prop_assert!(gap.abs() < 1e-10);
        }

        #[test]
        fn irreversible_closed_form_matches_definition(n in ball_point(), dn in vec3(1.0), h in field3(), dh in vec3(1.0)) {
            let p = point(n, dn, h, dh);
            let def = irreversible_entropy_rates(&p).unwrap().entropy_based;
            prop_assert!((def - entropy_based_irreversible_closed_form(&p)).abs() < 1e-10);
        }

        #[test]
        fn purity_loss_produces_entropy_based_irreversibility(n in ball_point(), dn in vec3(1.0), h in field3(), dh in vec3(1.0)) {
            let p = point(n, dn, h, dh);
            let si = entropy_based_irreversible_closed_form(&p);
            if p.norm_rate() <= 0.0 {
                prop_assert!(si >= 0.0);
            } else {
                prop_assert!(si <= 0.0);
            }
        }
    }
}
