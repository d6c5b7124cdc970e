//! Data behind the encoding, density, phasor and window plots.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fs;
use std::path::{Path, PathBuf};

use cvdj_core::bitstrings::BitString;
use cvdj_core::encoding::encode;
use cvdj_core::measurement::{asb_window_prob, constant_window_prob};
use cvdj_core::wavefunction::{pdf, phasor_angles};
use cvdj_core::{CvParams, PositionWavefunction};

use crate::output::Table;
use crate::Error;

/// The four `N = 4` strings shown in each panel set, in panel order.
pub const PANEL_STRINGS: [&str; 4] = ["0000", "0011", "0101", "0110"];
const PANEL_LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

/// `f_z(p)` on 481 points of `[-1.2, 1.2]` for `N = 4`, `P = 1`.
pub fn encoded_signal(z: &BitString) -> cvdj_core::Result<Table> {
    let params = CvParams::new(z.len(), 1.0)?;
    let mut t = Table::new(vec!["p", "value"]);
    for k in 0..=480 {
        let p = (k as f64 - 240.0) / 200.0;
        t.push(vec![p, encode(z, &params, p)?]);
    }
    Ok(t)
}

/// `|φ_z(x)|²` for `P = 1` on 2001 points of `[-10, 10]`, including `x = 0`.
pub fn density(z: &BitString) -> cvdj_core::Result<Table> {
    let wf = PositionWavefunction::new(z, CvParams::new(z.len(), 1.0)?)?;
    let density = pdf(&wf);
    let mut t = Table::new(vec!["x", "pdf"]);
    for k in 0..=2000 {
        let x = (k as f64 - 1000.0) / 100.0;
        t.push(vec![x, density.density(x)]);
    }
    Ok(t)
}

/// Unit phasors `e^{iφ_j}` for `N = 8`, `P = 1` at `x = π/2` and `x = π/4`.
pub fn phasors() -> Table {
    let mut t = Table::new(vec!["x", "j", "angle", "re", "im"]);
    for x in [FRAC_PI_2, FRAC_PI_4] {
        for (j, angle) in phasor_angles(8, 1.0, x).into_iter().enumerate() {
            let (s, c) = angle.sin_cos();
            t.push(vec![x, (j + 1) as f64, angle, c, s]);
        }
    }
    t
}

/// Window probabilities for `P = 1` and `δ = kπ/200`, `k = 1..=400`.
pub fn window_curves() -> cvdj_core::Result<Table> {
    let mut t = Table::new(vec!["delta", "p_constant", "p_asb", "separation"]);
    for k in 1..=400 {
        let delta = k as f64 * PI / 200.0;
        let c = constant_window_prob(1.0, delta)?;
        let a = asb_window_prob(1.0, delta)?;
        t.push(vec![delta, c, a, c - a]);
    }
    Ok(t)
}

/// Every figure table with its file name.
pub fn all_figures() -> cvdj_core::Result<Vec<(String, Table)>> {
    let mut out = Vec::new();
    for (s, letter) in PANEL_STRINGS.iter().zip(PANEL_LETTERS) {
        let z: BitString = s.parse()?;
        out.push((format!("fig4_{letter}.csv"), encoded_signal(&z)?));
    }
    for (s, letter) in PANEL_STRINGS.iter().zip(PANEL_LETTERS) {
        let z: BitString = s.parse()?;
        out.push((format!("fig6_{letter}.csv"), density(&z)?));
    }
    out.push(("fig7_phasors.csv".into(), phasors()));
    out.push(("fig8_window.csv".into(), window_curves()?));
    Ok(out)
}

/// Writes every figure table into `dir`, creating it if needed.
pub fn reproduce_figures(dir: &Path) -> Result<Vec<PathBuf>, Error> {
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::new();
    for (name, table) in all_figures()? {
        let path = dir.join(name);
        let io = |source| Error::Io {
            path: path.clone(),
            source,
        };
        let file = fs::File::create(&path).map_err(io)?;
        table
            .write_csv(std::io::BufWriter::new(file))
            .map_err(|e| io(std::io::Error::other(e)))?;
        written.push(path);
    }
    Ok(written)
}
