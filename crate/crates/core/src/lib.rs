//! Thermodynamic bookkeeping for open two-level systems on the Bloch sphere.
//!
//! The crate computes internal energy, heat, work, von Neumann entropy,
//! instantaneous temperature and irreversible entropy along arbitrary
//! two-level trajectories, under three decompositions of the first law:
//!
//! * conventional (weak coupling): work from `dH`, heat from `dρ`;
//! * Hamiltonian based: work from changes of the eigen-energies;
//! * entropy based: heat from changes of the state eigenvalues.
//!
//! It also provides the exactly solvable laser-driven atom coupled to a
//! dephasing bath and a photon bath ([`driven`]), and a set of brute-force
//! cross-checks ([`oracle`]): a fixed-step Lindblad integrator, central
//! differences and Simpson quadrature.
//!
//! Units: `ħ = k_B = 1`; frequencies and rates are expressed in units of the
//! atomic transition frequency `ω₀`, times in `1/ω₀`.

pub mod bloch;
pub mod driven;
pub mod error;
pub mod first_law;
pub mod linalg;
pub mod oracle;

pub use bloch::{Alignment, BlochState, DrivingField, StateEigensystem};
pub use driven::{
    BathRates, DrivenQubit, FloquetBloch, FourierTable, InitialState, ModelParams, SpectralModel,
    SteadyState,
};
pub use error::{Error, Result};
pub use first_law::{FirstLawRates, HeatWork, IrreversibleEntropy, TrajectoryPoint};
pub use oracle::{IntegratorConfig, NetVariation};

pub use nalgebra::{Complex, Vector3};

/// Tolerance for geometric identities on the Bloch ball.
pub const NUMERICAL_EPS: f64 = 1e-10;
