use std::io::Write;
use std::path::{Path, PathBuf};

use bloch_thermo::first_law::{self, FirstLawRates};
use bloch_thermo::{NetVariation, TrajectoryPoint};

use crate::error::CliError;

pub const TRAJECTORY_HEADER: [&str; 20] = [
    "t", "n_x", "n_y", "n_z", "n", "delta", "coh_abs", "U", "dU", "dW_wc", "dQ_wc", "dw_hb",
    "dq_hb", "dW_eb", "dQ_eb", "dS", "beta", "dSi_wc", "dSi_hb", "dSi_eb",
];

pub const SWEEP_COLUMNS: [&str; 10] = [
    "Delta_S",
    "Delta_U",
    "Delta_Q_wc",
    "Delta_q_hb",
    "Delta_Q_eb",
    "Delta_W_wc",
    "Delta_W_eb",
    "Delta_Si_wc",
    "Delta_Si_hb",
    "Delta_Si_eb",
];

/// One time sample of every plotted quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputRow {
    pub point: TrajectoryPoint,
    pub energy: f64,
    pub rates: FirstLawRates,
}

impl OutputRow {
    pub fn new(point: TrajectoryPoint) -> Result<Self, CliError> {
        Ok(Self {
            point,
            energy: point.field.vector().dot(&point.state.vector()),
            rates: first_law::evaluate(&point)?,
        })
    }

    pub fn values(&self) -> [f64; 20] {
        let n = self.point.state.vector();
        let r = &self.rates;
        [
            self.point.t,
            n.x,
            n.y,
            n.z,
            self.point.state.norm(),
            self.point.state.population_inversion(),
            self.point.state.coherence().norm(),
            self.energy,
            r.energy,
            r.conventional.work,
            r.conventional.heat,
            r.hamiltonian_based.work,
            r.hamiltonian_based.heat,
            r.entropy_based.work,
            r.entropy_based.heat,
            r.entropy,
            r.inverse_temperature,
            r.irreversible.conventional,
            r.irreversible.hamiltonian_based,
            r.irreversible.entropy_based,
        ]
    }
}

pub fn sweep_values(net: &NetVariation) -> [f64; 10] {
    [
        net.entropy,
        net.energy,
        net.conventional.heat,
        net.hamiltonian_based.heat,
        net.entropy_based.heat,
        net.conventional.work,
        net.entropy_based.work,
        net.irreversible.conventional,
        net.irreversible.hamiltonian_based,
        net.irreversible.entropy_based,
    ]
}

/// 12 significant digits; non-finite values become empty cells.
pub fn format_value(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else {
        String::new()
    }
}

pub fn write_csv<W: Write, const N: usize>(
    sink: W,
    header: &[&str],
    rows: impl IntoIterator<Item = [f64; N]>,
) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row.iter().map(|&x| format_value(x)))?;
    }
    writer.flush()?;
    Ok(())
}

/// `out.csv` → `out.gp`
pub fn plot_path(csv: &Path) -> PathBuf {
    csv.with_extension("gp")
}

/// Gnuplot script drawing the Bloch vector, the heat rates and the
/// irreversible entropy rates from the CSV written next to it.
pub fn gnuplot_script(csv_name: &str) -> String {
    let panels: [(&str, &[&str]); 4] = [
        ("Bloch vector", &["n_x", "n_y", "n_z", "n"]),
        ("energy rates", &["dU", "dQ_wc", "dq_hb", "dQ_eb"]),
        ("entropy and temperature", &["dS", "beta"]),
        (
            "irreversible entropy rates",
            &["dSi_wc", "dSi_hb", "dSi_eb"],
        ),
    ];
    let mut script = String::new();
    script.push_str("set datafile separator ','\n");
    script.push_str("set terminal pngcairo size 1200,900\n");
    script.push_str(&format!(
        "set output '{}'\n",
        Path::new(csv_name).with_extension("png").display()
    ));
    script.push_str("set multiplot layout 2,2\n");
    script.push_str("set xlabel 't'\n");
    for (title, columns) in panels {
        script.push_str(&format!("set title '{title}'\n"));
        let curves: Vec<String> = columns
            .iter()
            .map(|c| format!("'{csv_name}' using \"t\":\"{c}\" with lines title '{c}'"))
            .collect();
        script.push_str(&format!("plot {}\n", curves.join(", \\\n     ")));
    }
    script.push_str("unset multiplot\n");
    script
}
