//! Result serialization: CSV sweeps and JSON reports.
//!
//! Outputs are fully deterministic — field order is fixed by the structs,
//! floats are either 9-significant-digit scientific (CSV) or shortest
//! round-trip (JSON), and no timestamps are recorded — so re-running a
//! command on the same inputs reproduces the bytes exactly.

use std::io::Write;
use std::path::Path;

use cavity_eit::{PeakReport, SpectrumTable};
use serde::Serialize;

use crate::CliError;

/// Schema tag carried by every JSON report.
pub const SCHEMA_VERSION: &str = "1";

/// Deterministic run metadata (no wall clock, no randomness).
#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub gamma_units: bool,
}

impl Metadata {
    pub fn new(command: &str, gamma_units: bool) -> Self {
        Metadata {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            gamma_units,
        }
    }
}

/// Writes sweep tables as CSV: header `omega,mode,theta,value`, one row per
/// grid point ordered by grid index, frequencies divided by `unit`, and an
/// empty value column marking a refused (near-singular) frequency.
pub fn write_spectrum_csv(
    path: &Path,
    tables: &[SpectrumTable],
    unit: f64,
) -> Result<(), CliError> {
    let mut out = String::from("omega,mode,theta,value\n");
    let points = tables.first().map_or(0, |t| t.rows.len());
    for k in 0..points {
        for table in tables {
            let row = &table.rows[k];
            match row.value {
                Some(v) => out.push_str(&format!(
                    "{:.8e},{},{:.8e},{:.8e}\n",
                    row.omega / unit,
                    table.mode.index(),
                    table.theta,
                    v
                )),
                None => out.push_str(&format!(
                    "{:.8e},{},{:.8e},\n",
                    row.omega / unit,
                    table.mode.index(),
                    table.theta
                )),
            }
        }
    }
    write_atomic(path, out.as_bytes())
}

/// JSON mirror of one sweep row.
#[derive(Debug, Clone, Serialize)]
struct JsonRow {
    omega: f64,
    mode: u8,
    theta: f64,
    value: Option<f64>,
}

#[derive(Debug, Serialize)]
struct SpectrumJson {
    schema_version: &'static str,
    metadata: Metadata,
    rows: Vec<JsonRow>,
}

/// Writes the same sweep as JSON (row order identical to the CSV).
pub fn write_spectrum_json(
    path: &Path,
    tables: &[SpectrumTable],
    unit: f64,
    metadata: Metadata,
) -> Result<(), CliError> {
    let points = tables.first().map_or(0, |t| t.rows.len());
    let mut rows = Vec::new();
    for k in 0..points {
        for table in tables {
            let row = &table.rows[k];
            rows.push(JsonRow {
                omega: row.omega / unit,
                mode: table.mode.index(),
                theta: table.theta,
                value: row.value,
            });
        }
    }
    write_json(
        path,
        &SpectrumJson {
            schema_version: SCHEMA_VERSION,
            metadata,
            rows,
        },
    )
}

/// One located peak, frequencies in output units.
#[derive(Debug, Clone, Serialize)]
pub struct PeakRecord {
    pub mode: u8,
    pub theta: f64,
    pub omega: f64,
    pub height: f64,
    pub second_derivative: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
}

impl PeakRecord {
    pub fn from_report(mode: u8, theta: f64, peak: &PeakReport, unit: f64) -> Self {
        PeakRecord {
            mode,
            theta,
            omega: peak.omega / unit,
            height: peak.height,
            // d^2 S / d omega^2 rescales inversely with the square of the
            // frequency unit.
            second_derivative: peak.second_derivative * unit * unit,
            bracket: (peak.bracket.0 / unit, peak.bracket.1 / unit),
            iterations: peak.iterations,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PeaksJson {
    pub schema_version: &'static str,
    pub metadata: Metadata,
    pub peaks: Vec<PeakRecord>,
}

/// Semiclassical working point, serialized field by field.
#[derive(Debug, Serialize)]
pub struct SteadyJson {
    pub schema_version: &'static str,
    pub metadata: Metadata,
    pub a1_re: f64,
    pub a1_im: f64,
    pub a2_re: f64,
    pub a2_im: f64,
    pub s10_re: f64,
    pub s10_im: f64,
    pub s20_re: f64,
    pub s20_im: f64,
    pub s21_re: f64,
    pub s21_im: f64,
    pub w1: f64,
    pub w2: f64,
    pub p00: f64,
    pub p11: f64,
    pub p22: f64,
    pub drive1_re: f64,
    pub drive1_im: f64,
    pub drive2_re: f64,
    pub drive2_im: f64,
    pub residual: f64,
}

/// One validation comparison.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationRecord {
    pub name: String,
    pub expected: f64,
    pub observed: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Regime caveats and comparison semantics (empty when clean).
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ValidationJson {
    pub schema_version: &'static str,
    pub metadata: Metadata,
    pub records: Vec<ValidationRecord>,
    pub pass: bool,
}

/// Serializes any report as pretty JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("JSON serialization failed: {e}")))?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let mut file = std::fs::File::create(path)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
    file.write_all(bytes)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}
