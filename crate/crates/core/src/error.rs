use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Bloch vector norm {norm} exceeds 1; state is unphysical")]
    UnphysicalState { norm: f64 },

    #[error("non-finite component in {what}")]
    NonFinite { what: &'static str },

    #[error("driving field has zero norm; Hamiltonian eigenbasis is undefined")]
    DegenerateField,

    #[error("invalid parameter `{name}`: {value} ({reason})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error(
        "spectral function returned {value} at ω = {frequency}; must be finite and non-negative"
    )]
    InvalidSpectrum { frequency: f64, value: f64 },

    #[error("Γ1 = 0: no relaxation, steady state is undefined")]
    NoRelaxation,

    #[error("negative time t = {0}")]
    NegativeTime(f64),

    #[error("stability guard violated: dt·max(Γ1, Γ2, Ω_r, Ω) = {product} must be < 0.1")]
    StabilityGuard { product: f64 },

    #[error("invalid sample grid: {0}")]
    Grid(String),
}
