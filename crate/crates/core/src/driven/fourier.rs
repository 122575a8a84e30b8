use nalgebra::Complex;

use super::ModelParams;
use crate::linalg::Mat2;

/// Which system operator couples to the bath.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bath {
    /// `σ_z`, diagonal in the atom basis.
    Dephasing,
    /// `σ_x`, purely off-diagonal.
    Photon,
}

/// Real coefficients `s_{q,p}` of
/// `U_S†(t) σ_j U_S(t) = Σ_{q,p} e^{i(qΩ_r + pΩ)t} s_{q,p} σ̄_q`,
/// indexed by `q, p ∈ {−1, 0, +1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierTable {
    dephasing: [[f64; 3]; 3],
    photon: [[f64; 3]; 3],
}

impl FourierTable {
    pub fn new(model: &ModelParams) -> Self {
        let (c, s) = (model.cos_2theta(), model.sin_2theta());
        let mut dephasing = [[0.0; 3]; 3];
        dephasing[1][1] = c;
        dephasing[0][1] = -s;
        dephasing[2][1] = -s;

        let mut photon = [[0.0; 3]; 3];
        photon[1][0] = s / 2.0;
        photon[1][2] = s / 2.0;
        photon[2][2] = (c + 1.0) / 2.0;
        photon[0][0] = (c + 1.0) / 2.0;
        photon[2][0] = (c - 1.0) / 2.0;
        photon[0][2] = (c - 1.0) / 2.0;
        Self { dephasing, photon }
    }

    /// `s_{q,p}^{(j)}`; panics unless `q, p ∈ {−1, 0, 1}`.
    pub fn coefficient(&self, bath: Bath, q: i8, p: i8) -> f64 {
        assert!(
            (-1..=1).contains(&q) && (-1..=1).contains(&p),
            "q, p must be in {{-1, 0, 1}}"
        );
        let table = match bath {
            Bath::Dephasing => &self.dephasing,
            Bath::Photon => &self.photon,
        };
        table[(q + 1) as usize][(p + 1) as usize]
    }

    /// Nonzero `(q, p, s_{q,p})` entries.
    pub fn terms(&self, bath: Bath) -> impl Iterator<Item = (i8, i8, f64)> + '_ {
        (-1..=1i8)
            .flat_map(|q| (-1..=1i8).map(move |p| (q, p)))
            .map(move |(q, p)| (q, p, self.coefficient(bath, q, p)))
            .filter(|&(_, _, s)| s != 0.0)
    }

    /// Resums the series into the interaction-picture operator `σ_j(t)`.
    pub fn operator(&self, bath: Bath, model: &ModelParams, t: f64) -> Mat2 {
        let ops = model.floquet_operators();
        let omega_r = model.rabi_frequency();
        let omega = model.drive_frequency();
        self.terms(bath).fold(Mat2::zeros(), |acc, (q, p, s)| {
            let phase = Complex::from_polar(s, (q as f64 * omega_r + p as f64 * omega) * t);
            acc + ops[(q + 1) as usize] * phase
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn resonance_table() {
        let table = FourierTable::new(&ModelParams::reference());
        assert_abs_diff_eq!(
            table.coefficient(Bath::Dephasing, 0, 0),
            0.0,
            epsilon = 1e-16
        );
        assert_abs_diff_eq!(table.coefficient(Bath::Dephasing, 1, 0), -1.0);
        assert_abs_diff_eq!(table.coefficient(Bath::Dephasing, -1, 0), -1.0);
        for q in -1..=1 {
            assert_eq!(table.coefficient(Bath::Dephasing, q, 1), 0.0);
            assert_eq!(table.coefficient(Bath::Dephasing, q, -1), 0.0);
            assert_eq!(table.coefficient(Bath::Photon, q, 0), 0.0);
        }
        assert_abs_diff_eq!(table.coefficient(Bath::Photon, 1, 1), 0.5, epsilon = 1e-16);
        assert_abs_diff_eq!(
            table.coefficient(Bath::Photon, -1, -1),
            0.5,
            epsilon = 1e-16
        );
        assert_abs_diff_eq!(
            table.coefficient(Bath::Photon, 1, -1),
            -0.5,
            epsilon = 1e-16
        );
        assert_abs_diff_eq!(
            table.coefficient(Bath::Photon, -1, 1),
            -0.5,
            epsilon = 1e-16
        );
        assert_abs_diff_eq!(table.coefficient(Bath::Photon, 0, 1), 0.5);
        assert_abs_diff_eq!(table.coefficient(Bath::Photon, 0, -1), 0.5);
    }

    proptest! {
        #[test]
        fn series_reproduces_heisenberg_operators(
            omega in 0.3..2.0f64, eps in 0.0..0.8f64, t in 0.0..40.0f64,
        ) {
            let m = ModelParams::new(1.0, omega, eps).unwrap();
            let table = FourierTable::new(&m);
            let u = m.propagator(t);
            for (bath, op) in [(Bath::Dephasing, linalg::pauli_z()), (Bath::Photon, linalg::pauli_x())] {
                let direct = u.adjoint() * op * u;
                let series = table.operator(bath, &m, t);
                prop_assert!(linalg::max_abs_diff(&direct, &series) < 1e-12);
            }
        }
    }
}
