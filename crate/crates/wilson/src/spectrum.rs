//! CSV tables of the limiting spectral density.

use std::io::Write;

use serde::Serialize;
use wilson_core::closedform::spectral::{self, DensityMode, SpectralError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub x: f64,
    pub f_series: f64,
    pub f_closed: Option<f64>,
    pub abs_diff: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub rows: Vec<SpectrumRow>,
    /// Trapezoid mass of the series density over the same grid.
    pub mass: f64,
    pub max_abs_diff: Option<f64>,
}

/// The density on `points` equally spaced `x ∈ [0, 2π)`. The closed column
/// is present when a closed form exists for `a`.
pub fn spectrum_table(a: u32, beta: f64, points: usize, tol: f64) -> Result<SpectrumTable, SpectralError> {
    let closed_available = matches!(a, 1..=3);
    let mut rows = Vec::with_capacity(points);
    for x in spectral::grid(points) {
        let s = spectral::spectral_density(a, beta, x, DensityMode::Series { tol })?;
        let c = if closed_available {
            Some(spectral::spectral_density(a, beta, x, DensityMode::Closed)?)
        } else {
            None
        };
        rows.push(SpectrumRow {
            x,
            f_series: s,
            f_closed: c,
            abs_diff: c.map(|c| (s - c).abs()),
        });
    }
    let h = 2.0 * std::f64::consts::PI / points as f64;
    let mass = rows.iter().map(|r| r.f_series).sum::<f64>() * h;
    let max_abs_diff = rows.iter().filter_map(|r| r.abs_diff).reduce(f64::max);
    Ok(SpectrumTable {
        rows,
        mass,
        max_abs_diff,
    })
}

/// Writes the rows, then a final `mass` row whose second column holds the
/// quadrature of the series column.
pub fn write_csv<W: Write>(table: &SpectrumTable, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in &table.rows {
        w.serialize(r)?;
    }
    w.write_record(["mass", &table.mass.to_string(), "", ""])?;
    w.flush()?;
    Ok(())
}
