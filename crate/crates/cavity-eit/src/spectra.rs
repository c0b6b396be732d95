//! Stationary quadrature-noise spectra of the output fields.
//!
//! In frequency space the linear Langevin equations give
//! `dx(omega) = M(omega)^{-1} B F(omega)` with `M(omega) = -i omega I - A`.
//! The input-output relation `a_out = sqrt(gamma) a - a_in` then expresses
//! each output quadrature as a row vector over the twelve noise channels,
//! and the stationary spectrum is the two-sided contraction of that row
//! with the noise correlation matrix, the second factor taken at `-omega`:
//!
//! ```text
//! S_theta(omega) = u_theta(omega) . C . u_theta(-omega)^T ,
//! u_theta = e^{i theta} t_a + e^{-i theta} t_adag .
//! ```
//!
//! A vacuum-filled port gives exactly `S = 1` at every frequency and
//! quadrature angle; squeezing shows up as `S < 1`.  The engine refuses
//! frequencies where a marginal drift mode makes `M` singular instead of
//! returning junk, and reports them as gaps.

use num_complex::Complex64 as C64;

use crate::diffusion::noise_correlations;
use crate::error::Error;
use crate::fluctuations::{require_stable, LinearModel, StabilityReport};
use crate::order::{FluctVar, Mat12, NoiseVar, Vec12};
use crate::params::ModelParams;

/// Which output port the spectrum is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Mode 1, driving the transition to ground level 1.
    Pump,
    /// Mode 2, driving the transition to ground level 2 (the squeezed
    /// input port).
    Probe,
}

impl Mode {
    /// Doubled-space variables `(a, a_dag)` of this mode.
    pub fn field_vars(self) -> (FluctVar, FluctVar) {
        match self {
            Mode::Pump => (FluctVar::A1, FluctVar::A1Dag),
            Mode::Probe => (FluctVar::A2, FluctVar::A2Dag),
        }
    }

    /// Input noise channels `(a_in, a_in_dag)` of this mode.
    pub fn input_channels(self) -> (NoiseVar, NoiseVar) {
        match self {
            Mode::Pump => (NoiseVar::A1In, NoiseVar::A1InDag),
            Mode::Probe => (NoiseVar::A2In, NoiseVar::A2InDag),
        }
    }

    /// Cavity decay rate of this mode.
    pub fn decay(self, p: &ModelParams) -> f64 {
        match self {
            Mode::Pump => p.cavity_decay1,
            Mode::Probe => p.cavity_decay2,
        }
    }

    /// Conventional numeric label (pump = 1, probe = 2).
    pub fn index(self) -> u8 {
        match self {
            Mode::Pump => 1,
            Mode::Probe => 2,
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Pump => "pump",
            Mode::Probe => "probe",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pump" | "1" => Ok(Mode::Pump),
            "probe" | "2" => Ok(Mode::Probe),
            other => Err(format!(
                "unknown mode '{other}' (expected pump/1 or probe/2)"
            )),
        }
    }
}

/// One frequency sample; `None` marks a refused (singular) frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRow {
    pub omega: f64,
    pub value: Option<f64>,
}

/// A sweep of the spectrum over frequencies at fixed port and angle.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub mode: Mode,
    pub theta: f64,
    pub rows: Vec<SpectrumRow>,
}

/// A refined local maximum of the spectrum.
#[derive(Debug, Clone, Copy)]
pub struct PeakReport {
    /// Refined peak frequency.
    pub omega: f64,
    /// Spectrum value at the peak.
    pub height: f64,
    /// Central-difference second derivative at the peak (negative for a
    /// genuine maximum; its magnitude measures sharpness).
    pub second_derivative: f64,
    /// Grid bracket the refinement ran inside.
    pub bracket: (f64, f64),
    /// Golden-section iterations used.
    pub iterations: usize,
}

/// Precomputed stationary-noise machinery for one parameter set.
#[derive(Debug, Clone)]
pub struct SpectrumEngine {
    model: LinearModel,
    corr: Mat12,
    stability: StabilityReport,
    scale: f64,
}

impl SpectrumEngine {
    /// Validates the parameters, solves for the working point, linearizes,
    /// checks stability, and assembles the noise correlations.
    pub fn new(p: &ModelParams) -> Result<Self, Error> {
        let p = p.clone().validated()?;
        let model = LinearModel::from_params(&p)?;
        let stability = require_stable(&p, &model.a)?;
        let corr = noise_correlations(&p, &model.steady.mean);
        let scale = p.rate_scale();
        Ok(SpectrumEngine {
            model,
            corr,
            stability,
            scale,
        })
    }

    /// The linearized model the engine was built on.
    pub fn model(&self) -> &LinearModel {
        &self.model
    }

    /// Drift-eigenvalue classification at the working point.
    pub fn stability(&self) -> &StabilityReport {
        &self.stability
    }

    /// Noise correlation matrix in the channel ordering.
    pub fn correlations(&self) -> &Mat12 {
        &self.corr
    }

    fn check_resolvable(&self, omega: f64) -> Result<(), Error> {
        let tol = 10.0 * f64::EPSILON * self.scale.max(omega.abs());
        for lambda in &self.stability.marginal {
            // M(+-omega) is singular when -+ i omega hits the marginal mode.
            if (omega + lambda.im).abs() <= tol || (omega - lambda.im).abs() <= tol {
                return Err(Error::NearSingular { omega });
            }
        }
        Ok(())
    }

    /// The quadrature output row `u_theta(omega)` over the noise channels.
    fn quadrature_row(&self, mode: Mode, theta: f64, omega: f64) -> Result<Vec12, Error> {
        let (var_a, var_ad) = mode.field_vars();
        let (ch_in, ch_in_d) = mode.input_channels();
        let root = mode.decay(&self.model.params).sqrt();

        let m_t = (Mat12::identity() * C64::new(0.0, -omega) - self.model.a).transpose();
        let lu = m_t.lu();
        let unit = |v: FluctVar| {
            let mut e = Vec12::zeros();
            e[v.idx()] = C64::new(1.0, 0.0);
            e
        };
        let xa = lu
            .solve(&unit(var_a))
            .ok_or(Error::NearSingular { omega })?;
        let xad = lu
            .solve(&unit(var_ad))
            .ok_or(Error::NearSingular { omega })?;

        // Row of M^{-1} B, scaled into the output, minus the direct
        // input-output feedthrough.
        let mut ta = self.model.b.transpose() * xa * C64::new(root, 0.0);
        ta[ch_in.idx()] -= C64::new(1.0, 0.0);
        let mut tad = self.model.b.transpose() * xad * C64::new(root, 0.0);
        tad[ch_in_d.idx()] -= C64::new(1.0, 0.0);

        Ok(ta * C64::from_polar(1.0, theta) + tad * C64::from_polar(1.0, -theta))
    }

    /// Stationary noise spectrum of the `theta` quadrature of the chosen
    /// output port at (angular) frequency `omega`, normalized so vacuum
    /// input on a lossless path gives exactly 1.
    pub fn value(&self, mode: Mode, theta: f64, omega: f64) -> Result<f64, Error> {
        self.check_resolvable(omega)?;
        let u = self.quadrature_row(mode, theta, omega)?;
        let v = self.quadrature_row(mode, theta, -omega)?;
        let s: C64 = (u.transpose() * self.corr * v)[(0, 0)];
        // The two-sided contraction is real for any physical correlation
        // matrix; a sizeable imaginary residue would mean the inputs above
        // were inconsistent.
        if s.im.abs() > 1e-8 * s.re.abs().max(1.0) {
            return Err(Error::Linalg(format!(
                "spectrum at omega={omega} acquired imaginary part {}",
                s.im
            )));
        }
        Ok(s.re)
    }

    /// Sweeps the spectrum over `omegas`; refused (singular) frequencies
    /// become gaps rather than errors.
    pub fn sweep(&self, mode: Mode, theta: f64, omegas: &[f64]) -> Result<SpectrumTable, Error> {
        let mut rows = Vec::with_capacity(omegas.len());
        for &omega in omegas {
            match self.value(mode, theta, omega) {
                Ok(v) => rows.push(SpectrumRow {
                    omega,
                    value: Some(v),
                }),
                Err(Error::NearSingular { .. }) => rows.push(SpectrumRow { omega, value: None }),
                Err(e) => return Err(e),
            }
        }
        Ok(SpectrumTable { mode, theta, rows })
    }

    /// Finds the highest local maximum of the spectrum inside
    /// `[window.0, window.1]` by grid scan plus golden-section refinement.
    pub fn find_peak(
        &self,
        mode: Mode,
        theta: f64,
        window: (f64, f64),
        grid: usize,
    ) -> Result<PeakReport, Error> {
        find_peak(|w| self.value(mode, theta, w), window.0, window.1, grid)
    }
}

/// Golden-section refinement of the highest interior maximum of `f` on
/// `[lo, hi]`, scanned on `grid` uniformly spaced points (at least 8).
///
/// Returns [`Error::NoPeak`] when no interior local maximum exists on the
/// grid (monotone or edge-peaked data).
pub fn find_peak<F>(f: F, lo: f64, hi: f64, grid: usize) -> Result<PeakReport, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    assert!(hi > lo, "empty window");
    let n = grid.max(8);
    let xs: Vec<f64> = (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect();
    let mut ys = Vec::with_capacity(n);
    for &x in &xs {
        ys.push(f(x)?);
    }

    // Interior grid maxima become refinement candidates.
    let mut best: Option<PeakReport> = None;
    for k in 1..n - 1 {
        if !(ys[k] > ys[k - 1] && ys[k] >= ys[k + 1]) {
            continue;
        }
        let (mut a, mut b) = (xs[k - 1], xs[k + 1]);
        let inv_phi = 0.5 * (5.0_f64.sqrt() - 1.0);
        let mut c = b - inv_phi * (b - a);
        let mut d = a + inv_phi * (b - a);
        let mut fc = f(c)?;
        let mut fd = f(d)?;
        let mut iterations = 0;
        while (b - a) > 1e-12 * (hi - lo) && iterations < 200 {
            iterations += 1;
            if fc > fd {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c)?;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d)?;
            }
        }
        let omega = 0.5 * (a + b);
        let height = f(omega)?;
        let h = ((hi - lo) * 1e-5).max(1e-12);
        let second_derivative = (f(omega + h)? - 2.0 * height + f(omega - h)?) / (h * h);
        let candidate = PeakReport {
            omega,
            height,
            second_derivative,
            bracket: (xs[k - 1], xs[k + 1]),
            iterations,
        };
        if best.as_ref().is_none_or(|b| candidate.height > b.height) {
            best = Some(candidate);
        }
    }
    best.ok_or(Error::NoPeak { lo, hi })
}
