//! 2×2 complex matrix helpers in the atom basis `(|e⟩, |g⟩)`.
//!
//! `σ_z|e⟩ = |e⟩`, `σ_+ = |e⟩⟨g|`, and a state reads `ρ = (1 + n⃗·σ⃗)/2`.

use nalgebra::{Complex, Matrix2, Vector3};

pub type C64 = Complex<f64>;
pub type Mat2 = Matrix2<C64>;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

pub fn identity() -> Mat2 {
    Mat2::identity()
}

pub fn pauli_x() -> Mat2 {
    Mat2::new(ZERO, ONE, ONE, ZERO)
}

pub fn pauli_y() -> Mat2 {
    Mat2::new(ZERO, -I, I, ZERO)
}

pub fn pauli_z() -> Mat2 {
    Mat2::new(ONE, ZERO, ZERO, -ONE)
}

/// `σ_+ = |e⟩⟨g|`
pub fn raising() -> Mat2 {
    Mat2::new(ZERO, ONE, ZERO, ZERO)
}

/// `σ_- = |g⟩⟨e|`
pub fn lowering() -> Mat2 {
    Mat2::new(ZERO, ZERO, ONE, ZERO)
}

/// `v⃗·σ⃗`
pub fn pauli_dot(v: &Vector3<f64>) -> Mat2 {
    pauli_x() * C64::from(v.x) + pauli_y() * C64::from(v.y) + pauli_z() * C64::from(v.z)
}

pub fn density_from_bloch(n: &Vector3<f64>) -> Mat2 {
    (identity() + pauli_dot(n)) * C64::from(0.5)
}

/// Bloch vector `(Tr ρσ_x, Tr ρσ_y, Tr ρσ_z)`; imaginary parts are discarded.
pub fn bloch_from_density(rho: &Mat2) -> Vector3<f64> {
    Vector3::new(
        (rho * pauli_x()).trace().re,
        (rho * pauli_y()).trace().re,
        (rho * pauli_z()).trace().re,
    )
}

/// `exp(-i t a⃗·σ⃗)` in closed form.
pub fn su2_exp(a: &Vector3<f64>, t: f64) -> Mat2 {
    let norm = a.norm();
    if norm == 0.0 {
        return identity();
    }
    let phase = norm * t;
    identity() * C64::from(phase.cos()) - pauli_dot(&(a / norm)) * (I * phase.sin())
}

/// `U ρ U†`
pub fn conjugate(u: &Mat2, rho: &Mat2) -> Mat2 {
    u * rho * u.adjoint()
}

/// Largest absolute entry of `a - b`.
pub fn max_abs_diff(a: &Mat2, b: &Mat2) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let xy = pauli_x() * pauli_y();
        assert!(max_abs_diff(&xy, &(pauli_z() * I)) < 1e-15);
        assert!(max_abs_diff(&(raising() + lowering()), &pauli_x()) < 1e-15);
        assert!(
            max_abs_diff(
                &(raising() * lowering() - lowering() * raising()),
                &pauli_z()
            ) < 1e-15
        );
    }

    #[test]
    fn bloch_roundtrip() {
        let n = Vector3::new(0.3, -0.4, 0.5);
        let back = bloch_from_density(&density_from_bloch(&n));
        assert!((back - n).norm() < 1e-15);
    }

    #[test]
    fn su2_exp_is_unitary_and_matches_small_step() {
        let a = Vector3::new(0.2, -0.7, 0.4);
        let u = su2_exp(&a, 1.3);
        assert!(max_abs_diff(&(u * u.adjoint()), &identity()) < 1e-14);
        let dt = 1e-6;
        let step = su2_exp(&a, dt);
        let first_order = identity() - pauli_dot(&a) * (I * dt);
        assert!(max_abs_diff(&step, &first_order) < 1e-11);
    }
}
