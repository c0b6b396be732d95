//! Scenario configuration: a single TOML file with a flat key schema.
//!
//! Unknown keys are hard errors so that a misspelled physics parameter can
//! never silently fall back to a default.  Complex drive amplitudes are
//! split into `_re`/`_im` pairs because TOML has no complex literals.
//!
//! With `--gamma-units` every frequency-like entry (decays, dephasing,
//! detuning, couplings, and the frequency grid) is interpreted in units of
//! `atom_decay1` and converted to raw rates at the boundary; the library
//! itself never sees the convention.

use std::path::PathBuf;

use cavity_eit::{ModelParams, C64};
use serde::Deserialize;

use crate::CliError;

/// Frequency-grid scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

/// Frequency grid of a sweep, `points` samples from `start` to `stop`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaGrid {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    #[serde(default)]
    pub scale: Scale,
}

impl OmegaGrid {
    fn validate(&self) -> Result<(), CliError> {
        if self.points < 2 {
            return Err(CliError::config("omega_grid.points must be at least 2"));
        }
        // Negated form on purpose: NaN endpoints must land in the error arm.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.start < self.stop) {
            return Err(CliError::config(
                "omega_grid.start must be below omega_grid.stop",
            ));
        }
        if self.scale == Scale::Log && self.start <= 0.0 {
            return Err(CliError::config("a log omega_grid needs start > 0"));
        }
        Ok(())
    }

    /// Materializes the grid in raw rate units (`unit` = 1 without
    /// `--gamma-units`, `atom_decay1` with it).
    pub fn omegas(&self, unit: f64) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|k| {
                let t = k as f64 / (n - 1) as f64;
                match self.scale {
                    Scale::Linear => unit * (self.start + (self.stop - self.start) * t),
                    Scale::Log => {
                        unit * (self.start.ln() + (self.stop.ln() - self.start.ln()) * t).exp()
                    }
                }
            })
            .collect()
    }
}

/// Output file destinations.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    pub csv_path: Option<PathBuf>,
    pub json_path: Option<PathBuf>,
}

fn default_modes() -> Vec<u8> {
    vec![1, 2]
}

fn default_thetas() -> Vec<f64> {
    vec![0.0]
}

/// One scenario: the full model definition plus sweep and output plumbing.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    // Model parameters, flat, named exactly like the library fields.
    pub atom_decay1: f64,
    pub atom_decay2: f64,
    #[serde(default)]
    pub dephasing: f64,
    pub cavity_decay1: f64,
    pub cavity_decay2: f64,
    pub coupling1: f64,
    pub coupling2: f64,
    #[serde(default)]
    pub detuning: f64,
    pub atom_count: u64,
    #[serde(default)]
    pub alpha1_re: f64,
    #[serde(default)]
    pub alpha1_im: f64,
    #[serde(default)]
    pub alpha2_re: f64,
    #[serde(default)]
    pub alpha2_im: f64,
    #[serde(default)]
    pub squeeze_r: f64,
    #[serde(default)]
    pub squeeze_phi: f64,
    #[serde(default)]
    pub ground_only_dephasing: bool,

    // Sweep plumbing.
    pub omega_grid: Option<OmegaGrid>,
    #[serde(default = "default_modes")]
    pub modes: Vec<u8>,
    #[serde(default = "default_thetas")]
    pub thetas: Vec<f64>,
    #[serde(default)]
    pub outputs: Outputs,
    /// Optional guard: when present, must match the invoked subcommand.
    #[serde(default)]
    pub command: Option<String>,
}

impl ScenarioConfig {
    /// Parses and structurally validates a TOML scenario file.
    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
        let config: ScenarioConfig = toml::from_str(&text)
            .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        if let Some(grid) = &self.omega_grid {
            grid.validate()?;
        }
        if self.modes.is_empty() {
            return Err(CliError::config("modes must name at least one of 1, 2"));
        }
        if let Some(bad) = self.modes.iter().find(|m| !matches!(m, 1 | 2)) {
            return Err(CliError::config(format!(
                "modes may contain only 1 and 2, got {bad}"
            )));
        }
        if self.thetas.is_empty() {
            return Err(CliError::config("thetas must hold at least one angle"));
        }
        Ok(())
    }

    /// The unit every frequency-like entry is multiplied by on load:
    /// `atom_decay1` under `--gamma-units`, 1 otherwise.
    pub fn frequency_unit(&self, gamma_units: bool) -> f64 {
        if gamma_units {
            self.atom_decay1
        } else {
            1.0
        }
    }

    /// Builds the library parameter set, applying the unit convention.
    pub fn model_params(&self, gamma_units: bool) -> ModelParams {
        let u = self.frequency_unit(gamma_units);
        ModelParams {
            atom_decay1: self.atom_decay1,
            atom_decay2: u * self.atom_decay2,
            dephasing: u * self.dephasing,
            cavity_decay1: u * self.cavity_decay1,
            cavity_decay2: u * self.cavity_decay2,
            coupling1: u * self.coupling1,
            coupling2: u * self.coupling2,
            detuning: u * self.detuning,
            atom_count: self.atom_count,
            alpha1: C64::new(self.alpha1_re, self.alpha1_im),
            alpha2: C64::new(self.alpha2_re, self.alpha2_im),
            squeeze_r: self.squeeze_r,
            squeeze_phi: self.squeeze_phi,
            ground_only_dephasing: self.ground_only_dephasing,
        }
    }

    /// The grid, required for sweep-style commands.
    pub fn require_grid(&self) -> Result<&OmegaGrid, CliError> {
        self.omega_grid
            .as_ref()
            .ok_or_else(|| CliError::config("this command needs an [omega_grid] section"))
    }

    /// Enforces the optional `command` guard key.
    pub fn check_command(&self, invoked: &str) -> Result<(), CliError> {
        match &self.command {
            Some(declared) if declared != invoked => Err(CliError::config(format!(
                "config declares command = \"{declared}\" but \"{invoked}\" was invoked"
            ))),
            _ => Ok(()),
        }
    }
}
