//! Linearized fluctuation dynamics around the stationary working point.
//!
//! Small quantum fluctuations about the semiclassical steady state obey
//! linear Langevin equations `d(dx)/dt = A dx + B F`, where `dx` is the
//! doubled twelve-component fluctuation vector, `A` is the drift matrix
//! (the Jacobian of the collective equations at the working point), `F`
//! collects the twelve noise channels — four cavity inputs and eight
//! collective atomic forces — and `B` routes each channel into the equation
//! of the variable it forces.  This module assembles `A` and `B` and
//! classifies the spectrum of `A`, which must lie in the closed left half
//! plane for the stationary noise spectra downstream to exist.

use num_complex::Complex64 as C64;

use crate::doubled::{collective_jacobian, doubled_from_mean};
use crate::error::Error;
use crate::order::{Mat12, NoiseVar};
use crate::params::ModelParams;
use crate::semiclassics::SteadyState;

/// Drift matrix of the linearized Langevin equations at the working point.
pub fn drift_matrix(p: &ModelParams, ss: &SteadyState) -> Mat12 {
    collective_jacobian(p, &doubled_from_mean(p, &ss.mean))
}

/// Noise-coupling matrix: column `j` feeds noise channel `j` into the
/// equation of its target variable.  Cavity inputs couple with the square
/// root of the respective cavity decay; the collective atomic forces enter
/// with unit weight (their strength lives in the correlation matrix).
pub fn noise_matrix(p: &ModelParams) -> Mat12 {
    let mut b = Mat12::zeros();
    for nv in NoiseVar::ALL {
        let weight = match nv {
            NoiseVar::A1In | NoiseVar::A1InDag => p.cavity_decay1.sqrt(),
            NoiseVar::A2In | NoiseVar::A2InDag => p.cavity_decay2.sqrt(),
            _ => 1.0,
        };
        b[(nv.target().idx(), nv.idx())] = C64::new(weight, 0.0);
    }
    b
}

/// The linearized model: working point plus the `A` and `B` matrices.
#[derive(Debug, Clone)]
pub struct LinearModel {
    pub params: ModelParams,
    pub steady: SteadyState,
    pub a: Mat12,
    pub b: Mat12,
}

impl LinearModel {
    /// Assembles the linear model at an already-computed working point.
    pub fn new(p: &ModelParams, steady: SteadyState) -> Self {
        LinearModel {
            params: p.clone(),
            steady,
            a: drift_matrix(p, &steady),
            b: noise_matrix(p),
        }
    }

    /// Solves for the working point and assembles the linear model.
    pub fn from_params(p: &ModelParams) -> Result<Self, Error> {
        let steady = crate::semiclassics::solve_steady_state(p)?;
        Ok(LinearModel::new(p, steady))
    }

    /// Eigenvalue classification of the drift matrix.
    pub fn stability(&self) -> Result<StabilityReport, Error> {
        stability_report(&self.params, &self.a)
    }
}

/// Spectrum of the drift matrix, split by what it means for the stationary
/// problem.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    /// All twelve drift eigenvalues.
    pub eigenvalues: Vec<C64>,
    /// Largest real part.
    pub max_real: f64,
    /// Eigenvalues on the imaginary axis to within the marginal tolerance.
    /// Such modes are legitimate (conserved combinations in degenerate
    /// corners) but make the spectrum singular at their frequencies.
    pub marginal: Vec<C64>,
}

impl StabilityReport {
    /// Frequencies at which the stationary spectrum is singular because a
    /// marginal mode oscillates there.
    pub fn singular_frequencies(&self) -> Vec<f64> {
        self.marginal.iter().map(|l| l.im).collect()
    }
}

/// Computes the eigenvalues of `a` and classifies them against the scale of
/// the model's rates: marginal means `|Re| < 1e-10 * scale`.
pub fn stability_report(p: &ModelParams, a: &Mat12) -> Result<StabilityReport, Error> {
    let schur = a
        .try_schur(f64::EPSILON, 100_000)
        .ok_or_else(|| Error::Linalg("drift eigenvalue iteration did not converge".into()))?;
    let eig = schur
        .eigenvalues()
        .ok_or_else(|| Error::Linalg("drift eigenvalues unavailable".into()))?;
    let eigenvalues: Vec<C64> = eig.iter().cloned().collect();
    let scale = p.rate_scale();
    let max_real = eigenvalues
        .iter()
        .map(|l| l.re)
        .fold(f64::NEG_INFINITY, f64::max);
    let marginal = eigenvalues
        .iter()
        .cloned()
        .filter(|l| l.re.abs() < 1e-10 * scale)
        .collect();
    Ok(StabilityReport {
        eigenvalues,
        max_real,
        marginal,
    })
}

/// Like [`stability_report`], but refuses a drift matrix with any
/// eigenvalue meaningfully in the right half plane (threshold
/// `1e-8 * scale`), for which no stationary state exists.
pub fn require_stable(p: &ModelParams, a: &Mat12) -> Result<StabilityReport, Error> {
    let report = stability_report(p, a)?;
    if report.max_real > 1e-8 * p.rate_scale() {
        return Err(Error::Unstable {
            max_real: report.max_real,
        });
    }
    Ok(report)
}
