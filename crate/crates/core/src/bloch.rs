//! Bloch-ball geometry of a two-level state and of its driving Hamiltonian.
//!
//! A state is stored as its real Bloch vector `n⃗ = (2 Re ρ^{eg}, −2 Im ρ^{eg}, Δ)`
//! with `Δ = ρ^{ee} − ρ^{gg}`; a Hamiltonian `H = h⃗·σ⃗` is stored as `h⃗`.
//! Matrices are built on demand through [`crate::linalg`].

use nalgebra::{Complex, Vector2, Vector3};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat2, C64};

/// States with `|n⃗| > 1 + NORM_SLACK` are rejected.
pub const NORM_SLACK: f64 = 1e-9;

/// Below this norm a Bloch vector is treated as the maximally mixed point.
pub const DEGENERATE_NORM: f64 = 1e-12;

/// Density matrix of a two-level system, as a point of the Bloch ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState {
    n: Vector3<f64>,
}

impl BlochState {
    pub fn new(n: Vector3<f64>) -> Result<Self> {
        if !n.iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite {
                what: "Bloch vector",
            });
        }
        let norm = n.norm();
        if norm > 1.0 + NORM_SLACK {
            return Err(Error::UnphysicalState { norm });
        }
        Ok(Self { n })
    }

    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(Vector3::new(x, y, z))
    }

    pub fn maximally_mixed() -> Self {
        Self {
            n: Vector3::zeros(),
        }
    }

    pub fn ground() -> Self {
        Self {
            n: Vector3::new(0.0, 0.0, -1.0),
        }
    }

    pub fn excited() -> Self {
        Self {
            n: Vector3::new(0.0, 0.0, 1.0),
        }
    }

    /// Gibbs state `e^{−βH}/Z` of `H = h⃗·σ⃗`, i.e. `n⃗ = −tanh(β h) ĥ`.
    pub fn thermal(field: &DrivingField, beta: f64) -> Result<Self> {
        let h = field.norm();
        if h == 0.0 {
            return Ok(Self::maximally_mixed());
        }
        Self::new(-(beta * h).tanh() * field.unit())
    }

    /// Reads the Bloch vector off a 2×2 density matrix (atom basis).
    pub fn from_density_matrix(rho: &Mat2) -> Result<Self> {
        Self::new(linalg::bloch_from_density(rho))
    }

    pub fn vector(&self) -> Vector3<f64> {
        self.n
    }

    /// `n_t = |n⃗|`, clamped to `[0, 1]` against rounding.
    pub fn norm(&self) -> f64 {
        self.n.norm().min(1.0)
    }

    /// Unit vector `n̂`, or `None` at the maximally mixed point.
    pub fn unit(&self) -> Option<Vector3<f64>> {
        let n = self.n.norm();
        (n >= DEGENERATE_NORM).then(|| self.n / n)
    }

    /// `Δ_t = ρ^{ee} − ρ^{gg}`
    pub fn population_inversion(&self) -> f64 {
        self.n.z
    }

    /// `ρ^{eg} = (n_x − i n_y)/2`
    pub fn coherence(&self) -> C64 {
        Complex::new(self.n.x / 2.0, -self.n.y / 2.0)
    }

    /// Phase `φ` with `ρ^{eg} = |ρ^{eg}| e^{−iφ}`; `None` when `ρ^{eg} = 0`.
    pub fn coherence_phase(&self) -> Option<f64> {
        let c = self.coherence();
        (c.norm() > 0.0).then(|| -c.arg())
    }

    /// Polar angle `2φ` of the eigenbasis: `cos 2φ = Δ/n`, `tan 2φ = 2|ρ^{eg}|/Δ`.
    pub fn mixing_angle(&self) -> f64 {
        (2.0 * self.coherence().norm()).atan2(self.population_inversion())
    }

    /// `(n_+, n_−) = ((1 + n)/2, (1 − n)/2)`
    pub fn eigenvalues(&self) -> (f64, f64) {
        let n = self.norm();
        ((1.0 + n) / 2.0, (1.0 - n) / 2.0)
    }

    pub fn eigensystem(&self) -> StateEigensystem {
        let (plus, minus) = self.eigenvalues();
        let phase = self.coherence_phase();
        let (eigvec_plus, eigvec_minus) =
            polar_eigenvectors(self.mixing_angle() / 2.0, phase.unwrap_or(0.0));
        StateEigensystem {
            plus,
            minus,
            eigvec_plus,
            eigvec_minus,
            gauge_arbitrary: phase.is_none(),
        }
    }

    pub fn density_matrix(&self) -> Mat2 {
        linalg::density_from_bloch(&self.n)
    }

    /// `P = Tr ρ² = (1 + n²)/2`
    pub fn purity(&self) -> f64 {
        let n = self.norm();
        (1.0 + n * n) / 2.0
    }

    /// `S = −n_+ ln n_+ − n_− ln n_−` with `0 ln 0 = 0`.
    pub fn von_neumann_entropy(&self) -> f64 {
        let (plus, minus) = self.eigenvalues();
        -(xlnx(plus) + xlnx(minus))
    }
}

/// Eigen-decomposition of a state, following the `(φ, ϕ)` parametrisation
///
/// ```text
/// |n_+⟩ =  cos φ |e⟩ + e^{iϕ} sin φ |g⟩
/// |n_−⟩ = −e^{−iϕ} sin φ |e⟩ + cos φ |g⟩
/// ```
///
/// When the coherence vanishes the azimuth `ϕ` is undefined; it is set to 0
/// and `gauge_arbitrary` is raised.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateEigensystem {
    pub plus: f64,
    pub minus: f64,
    pub eigvec_plus: Vector2<C64>,
    pub eigvec_minus: Vector2<C64>,
    pub gauge_arbitrary: bool,
}

/// Hamiltonian `H_t = h⃗_t·σ⃗` (angular-frequency units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrivingField {
    h: Vector3<f64>,
}

impl DrivingField {
    pub fn new(h: Vector3<f64>) -> Result<Self> {
        if !h.iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite {
                what: "field vector",
            });
        }
        Ok(Self { h })
    }

    pub fn vector(&self) -> Vector3<f64> {
        self.h
    }

    pub fn norm(&self) -> f64 {
        self.h.norm()
    }

    /// `ĥ`; the zero vector when `h = 0`.
    pub fn unit(&self) -> Vector3<f64> {
        let h = self.h.norm();
        if h > 0.0 {
            self.h / h
        } else {
            Vector3::zeros()
        }
    }

    /// `(E_+, E_−) = (h, −h)`
    pub fn eigenenergies(&self) -> (f64, f64) {
        let h = self.norm();
        (h, -h)
    }

    /// `2θ_t`, with `cos 2θ_t = h_z/h`.
    pub fn polar_angle(&self) -> f64 {
        self.h.x.hypot(self.h.y).atan2(self.h.z)
    }

    /// `Θ_t` from `H^{eg} = |H^{eg}| e^{−iΘ_t}`.
    pub fn azimuth(&self) -> f64 {
        self.h.y.atan2(self.h.x)
    }

    /// `(|E_+⟩, |E_−⟩)` in the atom basis.
    pub fn eigenvectors(&self) -> (Vector2<C64>, Vector2<C64>) {
        polar_eigenvectors(self.polar_angle() / 2.0, self.azimuth())
    }

    pub fn matrix(&self) -> Mat2 {
        linalg::pauli_dot(&self.h)
    }
}

/// `cos α`, the angle between `n̂` and `ĥ`.
///
/// At `n = 0` or `h = 0` the angle is undefined; `cos_alpha` is then 0 and
/// `degenerate` is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alignment {
    pub cos_alpha: f64,
    pub degenerate: bool,
}

impl Alignment {
    /// `sin² α`, computed without cancellation.
    pub fn sin2_alpha(&self) -> f64 {
        (1.0 - self.cos_alpha * self.cos_alpha).max(0.0)
    }
}

/// `U = n⃗·h⃗ = n h cos α`
pub fn internal_energy(state: &BlochState, field: &DrivingField) -> f64 {
    state.vector().dot(&field.vector())
}

/// `cos α = n̂·ĥ`
pub fn cos_alpha(state: &BlochState, field: &DrivingField) -> Alignment {
    match state.unit() {
        Some(n_hat) if field.norm() > 0.0 => Alignment {
            cos_alpha: n_hat.dot(&field.unit()).clamp(-1.0, 1.0),
            degenerate: false,
        },
        _ => Alignment {
            cos_alpha: 0.0,
            degenerate: true,
        },
    }
}

/// `cos α = |⟨E_+|n_+⟩|² − |⟨E_−|n_+⟩|²`, from explicit eigenvectors.
pub fn cos_alpha_from_overlaps(state: &BlochState, field: &DrivingField) -> f64 {
    let n_plus = state.eigensystem().eigvec_plus;
    let (e_plus, e_minus) = field.eigenvectors();
    e_plus.dotc(&n_plus).norm_sqr() - e_minus.dotc(&n_plus).norm_sqr()
}

/// `cos α = cos 2φ cos 2θ + sin 2φ sin 2θ cos(ϕ − Θ)`
pub fn cos_alpha_from_angles(state: &BlochState, field: &DrivingField) -> f64 {
    let two_phi = state.mixing_angle();
    let two_theta = field.polar_angle();
    let azimuth_gap = state.coherence_phase().unwrap_or(0.0) - field.azimuth();
    two_phi.cos() * two_theta.cos() + two_phi.sin() * two_theta.sin() * azimuth_gap.cos()
}

fn polar_eigenvectors(half_polar: f64, azimuth: f64) -> (Vector2<C64>, Vector2<C64>) {
    let (s, c) = half_polar.sin_cos();
    let phase = Complex::from_polar(1.0, azimuth);
    let plus = Vector2::new(Complex::from(c), phase * s);
    let minus = Vector2::new(-phase.conj() * s, Complex::from(c));
    (plus, minus)
}

fn xlnx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn state(x: f64, y: f64, z: f64) -> BlochState {
        BlochState::from_components(x, y, z).unwrap()
    }

    fn field(x: f64, y: f64, z: f64) -> DrivingField {
        DrivingField::new(Vector3::new(x, y, z)).unwrap()
    }

    fn c(re: f64) -> C64 {
        Complex::from(re)
    }

    #[test]
    fn eigensystem_of_excited_state() {
        let es = BlochState::excited().eigensystem();
        assert_eq!((es.plus, es.minus), (1.0, 0.0));
        assert_abs_diff_eq!(
            (es.eigvec_plus - Vector2::new(c(1.0), c(0.0))).norm(),
            0.0,
            epsilon = 1e-15
        );
        assert!(es.gauge_arbitrary);
    }

    #[test]
    fn eigensystem_of_maximally_mixed_state() {
        let es = BlochState::maximally_mixed().eigensystem();
        assert_eq!((es.plus, es.minus), (0.5, 0.5));
    }

    #[test]
    fn eigensystem_of_x_polarised_state() {
        let s = state(1.0, 0.0, 0.0);
        assert_abs_diff_eq!(s.mixing_angle(), std::f64::consts::FRAC_PI_2);
        assert_eq!(s.coherence_phase(), Some(0.0));
        let es = s.eigensystem();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!((es.plus, es.minus).0, 1.0);
        assert_abs_diff_eq!(
            (es.eigvec_plus - Vector2::new(c(r), c(r))).norm(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn ground_state_eigenvector_is_g() {
        let es = BlochState::ground().eigensystem();
        assert_abs_diff_eq!(es.plus, 1.0);
        assert_abs_diff_eq!(es.eigvec_plus[0].norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(es.eigvec_plus[1].norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn purity_and_entropy_values() {
        assert_eq!(BlochState::maximally_mixed().purity(), 0.5);
        assert_eq!(BlochState::ground().purity(), 1.0);
        assert_abs_diff_eq!(
            BlochState::maximally_mixed().von_neumann_entropy(),
            2f64.ln()
        );
        assert_eq!(BlochState::ground().von_neumann_entropy(), 0.0);

        // n = 1/3 is the steady-state norm for γ+ = 0.1, γ− = 0.05 (κ = −1/6)
        let s = state(1.0 / 3.0, 0.0, 0.0);
        assert_abs_diff_eq!(s.purity(), 5.0 / 9.0, epsilon = 1e-15);
        let k: f64 = 1.0 / 6.0;
        let closed =
            (2.0 / (1.0 - 4.0 * k * k).sqrt()).ln() + k * ((1.0 - 2.0 * k) / (1.0 + 2.0 * k)).ln();
        assert_abs_diff_eq!(s.von_neumann_entropy(), closed, epsilon = 1e-14);
        assert_abs_diff_eq!(s.von_neumann_entropy(), 0.6365141682948128, epsilon = 1e-14);
    }

    #[test]
    fn internal_energy_examples() {
        assert_eq!(
            internal_energy(&state(0.0, 0.0, 1.0), &field(0.0, 0.0, 0.5)),
            0.5
        );
        assert_eq!(
            internal_energy(&state(1.0, 0.0, 0.0), &field(0.0, 0.0, 0.5)),
            0.0
        );
        assert_eq!(
            internal_energy(&state(0.0, 0.0, -1.0), &field(0.3, 0.0, 0.5)),
            -0.5
        );
    }

    #[test]
    fn cos_alpha_examples() {
        assert_eq!(
            cos_alpha(&state(0.0, 0.0, 1.0), &field(0.0, 0.0, 2.0)).cos_alpha,
            1.0
        );
        assert_eq!(
            cos_alpha(&state(0.0, 1.0, 0.0), &field(0.0, 0.0, 2.0)).cos_alpha,
            0.0
        );
        let degenerate = cos_alpha(&BlochState::maximally_mixed(), &field(0.0, 0.0, 2.0));
        assert!(degenerate.degenerate);
        assert_eq!(degenerate.cos_alpha, 0.0);
        assert!(cos_alpha(&state(0.0, 0.0, 1.0), &field(0.0, 0.0, 0.0)).degenerate);
    }

    #[test]
    fn rejects_unphysical_states() {
        assert!(matches!(
            BlochState::from_components(1.0, 1.0, 0.0),
            Err(Error::UnphysicalState { .. })
        ));
        assert!(BlochState::from_components(0.0, 0.0, 1.0 + 5e-10).is_ok());
        assert!(BlochState::from_components(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn thermal_state_points_against_field() {
        let f = field(0.3, 0.0, 0.5);
        let s = BlochState::thermal(&f, 1.0).unwrap();
        assert_abs_diff_eq!(s.norm(), (f.norm()).tanh(), epsilon = 1e-15);
        assert_abs_diff_eq!(cos_alpha(&s, &f).cos_alpha, -1.0, epsilon = 1e-15);
    }

    fn ball_point() -> impl Strategy<Value = Vector3<f64>> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, 0.0..1.0f64).prop_filter_map(
            "nonzero direction",
            |(x, y, z, r)| {
                let v = Vector3::new(x, y, z);
                (v.norm() > 1e-3).then(|| v / v.norm() * r)
            },
        )
    }

    fn field_vector() -> impl Strategy<Value = Vector3<f64>> {
        (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_filter_map("nonzero", |(x, y, z)| {
            let v = Vector3::new(x, y, z);
            (v.norm() > 1e-3).then_some(v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn norm_identity(n in ball_point()) {
            let s = BlochState::new(n).unwrap();
            let lhs = s.norm() * s.norm();
            let rhs = 4.0 * s.coherence().norm_sqr() + s.population_inversion().powi(2);
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }

        #[test]
        fn eigensystem_reconstructs_state(n in ball_point()) {
            let s = BlochState::new(n).unwrap();
            let es = s.eigensystem();
            prop_assert!((es.plus + es.minus - 1.0).abs() < 1e-15);
            prop_assert!(es.eigvec_plus.dotc(&es.eigvec_minus).norm() < 1e-12);
            let rho = es.eigvec_plus * es.eigvec_plus.adjoint() * Complex::from(es.plus)
                + es.eigvec_minus * es.eigvec_minus.adjoint() * Complex::from(es.minus);
            let back = linalg::bloch_from_density(&rho);
            prop_assert!((back - n).norm() < 1e-10);
        }

        #[test]
        fn purity_and_entropy_monotone(a in 0.0..1.0f64, b in 0.0..1.0f64) {
            prop_assume!((a - b).abs() > 1e-9);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let s_lo = state(lo, 0.0, 0.0);
            let s_hi = state(0.0, hi, 0.0);
            prop_assert!(s_lo.purity() < s_hi.purity());
            prop_assert!(s_lo.von_neumann_entropy() > s_hi.von_neumann_entropy());
        }

        #[test]
        fn energy_equals_matrix_trace(n in ball_point(), h in field_vector()) {
            let s = BlochState::new(n).unwrap();
            let f = DrivingField::new(h).unwrap();
            let trace = (f.matrix() * s.density_matrix()).trace();
            prop_assert!((trace.re - internal_energy(&s, &f)).abs() < 1e-12);
            prop_assert!(trace.im.abs() < 1e-12);
        }

        #[test]
        fn cos_alpha_forms_agree(n in ball_point(), h in field_vector()) {
            prop_assume!(n.norm() > 1e-6);
            let s = BlochState::new(n).unwrap();
            let f = DrivingField::new(h).unwrap();
            let direct = cos_alpha(&s, &f).cos_alpha;
            prop_assert!((direct - cos_alpha_from_overlaps(&s, &f)).abs() < 1e-10);
            prop_assert!((direct - cos_alpha_from_angles(&s, &f)).abs() < 1e-10);
        }

        #[test]
        fn field_eigen_invariants(h in field_vector()) {
            let f = DrivingField::new(h).unwrap();
            let (ep, em) = f.eigenenergies();
            prop_assert_eq!(ep + em, 0.0);
            prop_assert!((f.polar_angle().cos() - h.z / f.norm()).abs() < 1e-12);
            let (vp, _) = f.eigenvectors();
            let hv = f.matrix() * vp;
            prop_assert!((hv - vp * Complex::from(ep)).norm() < 1e-12);
        }
    }
}
