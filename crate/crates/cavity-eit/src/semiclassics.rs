//! Semiclassical working point: mean amplitudes, the dark-state seed, and
//! the Newton refinement that pins down the stationary state.
//!
//! The mean-field description keeps two cavity amplitudes and, per atom,
//! five real degrees of freedom packed into three complex coherences and
//! two inversions.  With both modes driven on two-photon resonance the
//! atoms settle into a coherent-population-trapping state fixed by the two
//! Rabi frequencies; ground-state decoherence then mixes in a small excited
//! population, which this module resolves by Newton iteration at frozen
//! cavity amplitudes.  The classical drives that hold those amplitudes are
//! recovered at the end from the cavity equations themselves.

use nalgebra::{SMatrix, SVector};
use num_complex::Complex64 as C64;

use crate::atom::{density_matrix, expectation, inversion, sigma, AtomGenerator};
use crate::doubled::{collective_jacobian, doubled_from_mean};
use crate::error::Error;
use crate::order::FluctVar;
use crate::params::ModelParams;

/// Mean values of the cavity amplitudes and the single-atom moments.
///
/// `s10`, `s20`, `s21` are the expectations of the lowering-type projectors
/// `|1><0|`, `|2><0|`, `|2><1|`; `w1`, `w2` are the inversions between the
/// excited state and each ground state.  Atomic entries are per atom — the
/// collective moments are `N` times these.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanState {
    pub a1: C64,
    pub a2: C64,
    pub s10: C64,
    pub s20: C64,
    pub s21: C64,
    pub w1: f64,
    pub w2: f64,
}

impl MeanState {
    /// Populations `[p00, p11, p22]` reconstructed from the two inversions
    /// and the unit trace.
    pub fn populations(&self) -> [f64; 3] {
        let p00 = (1.0 + self.w1 + self.w2) / 3.0;
        [p00, p00 - self.w1, p00 - self.w2]
    }

    /// True when every population lies in `[-tol, 1 + tol]`.
    pub fn populations_in_bounds(&self, tol: f64) -> bool {
        self.populations()
            .iter()
            .all(|&p| p >= -tol && p <= 1.0 + tol)
    }

    /// True when every coherence respects the Cauchy-Schwarz bound set by
    /// the populations it connects, up to `tol`.
    pub fn coherences_in_bounds(&self, tol: f64) -> bool {
        let [p00, p11, p22] = self.populations();
        self.s10.norm_sqr() <= p00 * p11 + tol
            && self.s20.norm_sqr() <= p00 * p22 + tol
            && self.s21.norm_sqr() <= p11 * p22 + tol
    }
}

/// Time derivatives of the mean values; atomic entries are per atom, the
/// cavity entries are the full amplitude equations including the collective
/// polarization source term.
#[derive(Debug, Clone, Copy)]
pub struct MeanDrift {
    pub da1: C64,
    pub da2: C64,
    pub ds10: C64,
    pub ds20: C64,
    pub ds21: C64,
    pub dw1: f64,
    pub dw2: f64,
}

impl MeanDrift {
    /// Largest magnitude among all components.
    pub fn max_norm(&self) -> f64 {
        [
            self.da1.norm(),
            self.da2.norm(),
            self.ds10.norm(),
            self.ds20.norm(),
            self.ds21.norm(),
            self.dw1.abs(),
            self.dw2.abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// A self-consistent stationary point: mean values plus the classical
/// drive amplitudes that hold the cavity fields there.
#[derive(Debug, Clone, Copy)]
pub struct SteadyState {
    pub mean: MeanState,
    pub drive1: C64,
    pub drive2: C64,
    /// Largest residual of the full equations of motion at the returned
    /// point, in units of the largest rate in the problem.
    pub residual: f64,
}

/// Mean-field equations of motion evaluated through the single-atom
/// generator.
///
/// The atomic rows are `d<x>/dt = <L(x)>` with `L` the adjoint generator at
/// the given cavity amplitudes, evaluated against the density matrix
/// reconstructed from `m`; the cavity rows couple to the collective
/// polarization `N s_i0` and to the classical drives.  Using the generator
/// here (rather than transcribed equations) keeps the drift consistent by
/// construction with the diffusion matrix, which comes from the same
/// generator.
pub fn mean_drift(p: &ModelParams, m: &MeanState, drive1: C64, drive2: C64) -> MeanDrift {
    let gen = AtomGenerator::new(p, m.a1, m.a2);
    let rho = density_matrix(m);
    let rate = |x| expectation(&rho, &gen.apply(&x));
    let n = p.n_atoms();
    let i = C64::new(0.0, 1.0);
    MeanDrift {
        da1: -i * p.coupling1 * n * m.s10 - 0.5 * p.cavity_decay1 * m.a1
            + p.cavity_decay1.sqrt() * drive1,
        da2: -i * p.coupling2 * n * m.s20 - 0.5 * p.cavity_decay2 * m.a2
            + p.cavity_decay2.sqrt() * drive2,
        ds10: rate(sigma(1, 0)),
        ds20: rate(sigma(2, 0)),
        ds21: rate(sigma(2, 1)),
        dw1: rate(inversion(1)).re,
        dw2: rate(inversion(2)).re,
    }
}

/// Classical drive amplitudes that make the cavity equations stationary at
/// the mean state `m`.  A mode with zero cavity decay cannot be driven;
/// its required drive is reported as zero.
pub fn required_drive(p: &ModelParams, m: &MeanState) -> (C64, C64) {
    let i = C64::new(0.0, 1.0);
    let one = |gamma: f64, g: f64, a: C64, s: C64| {
        if gamma > 0.0 {
            (0.5 * gamma * a + i * g * p.n_atoms() * s) / gamma.sqrt()
        } else {
            C64::new(0.0, 0.0)
        }
    };
    (
        one(p.cavity_decay1, p.coupling1, m.a1, m.s10),
        one(p.cavity_decay2, p.coupling2, m.a2, m.s20),
    )
}

/// Coherent-population-trapping seed at the requested cavity amplitudes.
///
/// The ground-state superposition annihilated by both Raman transitions is
/// proportional to `(Omega2, -Omega1)`; it is an exact stationary state of
/// the lossless dynamics and the natural starting point for the Newton
/// refinement.  When both couplings vanish but a field is still present the
/// atoms are left in the unpolarized ground mixture.  Two dark amplitudes
/// leave the working point undefined, which is reported as
/// [`Error::ZeroDrive`].
pub fn dark_state_seed(p: &ModelParams) -> Result<MeanState, Error> {
    if p.alpha1.norm() == 0.0 && p.alpha2.norm() == 0.0 {
        return Err(Error::ZeroDrive);
    }
    let omega1 = p.coupling1 * p.alpha1;
    let omega2 = p.coupling2 * p.alpha2;
    let total = omega1.norm_sqr() + omega2.norm_sqr();
    let zero = C64::new(0.0, 0.0);
    if total == 0.0 {
        // Fields without coupling: the atoms see no light at all.
        return Ok(MeanState {
            a1: p.alpha1,
            a2: p.alpha2,
            s10: zero,
            s20: zero,
            s21: zero,
            w1: -0.5,
            w2: -0.5,
        });
    }
    let p11 = omega2.norm_sqr() / total;
    let p22 = omega1.norm_sqr() / total;
    Ok(MeanState {
        a1: p.alpha1,
        a2: p.alpha2,
        s10: zero,
        s20: zero,
        s21: -omega1.conj() * omega2 / total,
        w1: -p11,
        w2: -p22,
    })
}

/// Order of the real coordinates used by the Newton iteration.
const NEWTON_DIM: usize = 8;

fn newton_coords(m: &MeanState) -> [f64; NEWTON_DIM] {
    [
        m.w1, m.w2, m.s10.re, m.s10.im, m.s20.re, m.s20.im, m.s21.re, m.s21.im,
    ]
}

fn state_from_coords(p: &ModelParams, y: &[f64; NEWTON_DIM]) -> MeanState {
    MeanState {
        a1: p.alpha1,
        a2: p.alpha2,
        w1: y[0],
        w2: y[1],
        s10: C64::new(y[2], y[3]),
        s20: C64::new(y[4], y[5]),
        s21: C64::new(y[6], y[7]),
    }
}

fn atomic_residual(p: &ModelParams, m: &MeanState) -> [f64; NEWTON_DIM] {
    let d = mean_drift(p, m, C64::new(0.0, 0.0), C64::new(0.0, 0.0));
    [
        d.dw1, d.dw2, d.ds10.re, d.ds10.im, d.ds20.re, d.ds20.im, d.ds21.re, d.ds21.im,
    ]
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// Real 8x8 Jacobian of [`atomic_residual`] with respect to the Newton
/// coordinates, obtained from the analytic collective Jacobian.  In the
/// atomic block every entry involves only cavity amplitudes, so the
/// per-atom and collective derivatives coincide; complex columns are split
/// into real and imaginary parts by the chain rule for a function of a
/// coordinate and its formal conjugate.
fn newton_jacobian(p: &ModelParams, m: &MeanState) -> SMatrix<f64, NEWTON_DIM, NEWTON_DIM> {
    use FluctVar::*;
    let x = doubled_from_mean(p, m);
    let j = collective_jacobian(p, &x);
    // Complex coordinates as (variable, formal-conjugate) column pairs of
    // the doubled system.
    let pairs: [(FluctVar, FluctVar); 3] = [(S10, S01), (S20, S02), (S21, S12)];
    let mut out = SMatrix::<f64, NEWTON_DIM, NEWTON_DIM>::zeros();
    let i = C64::new(0.0, 1.0);

    // Inversion rows: real residuals.
    for (r_out, r) in [(0usize, W1), (1usize, W2)] {
        out[(r_out, 0)] = j[(r.idx(), W1.idx())].re;
        out[(r_out, 1)] = j[(r.idx(), W2.idx())].re;
        for (k, &(s, sbar)) in pairs.iter().enumerate() {
            let a = j[(r.idx(), s.idx())];
            let b = j[(r.idx(), sbar.idx())];
            out[(r_out, 2 + 2 * k)] = (a + b).re;
            out[(r_out, 3 + 2 * k)] = (i * (a - b)).re;
        }
    }
    // Coherence rows: complex residuals split into real and imaginary rows.
    for (k_out, f) in [S10, S20, S21].into_iter().enumerate() {
        let re_row = 2 + 2 * k_out;
        let im_row = 3 + 2 * k_out;
        let dw1 = j[(f.idx(), W1.idx())];
        let dw2 = j[(f.idx(), W2.idx())];
        out[(re_row, 0)] = dw1.re;
        out[(im_row, 0)] = dw1.im;
        out[(re_row, 1)] = dw2.re;
        out[(im_row, 1)] = dw2.im;
        for (k, &(s, sbar)) in pairs.iter().enumerate() {
            let a = j[(f.idx(), s.idx())];
            let b = j[(f.idx(), sbar.idx())];
            let d_re = a + b;
            let d_im = i * (a - b);
            out[(re_row, 2 + 2 * k)] = d_re.re;
            out[(im_row, 2 + 2 * k)] = d_re.im;
            out[(re_row, 3 + 2 * k)] = d_im.re;
            out[(im_row, 3 + 2 * k)] = d_im.im;
        }
    }
    out
}

/// Stationary state of the full mean-field equations at the requested
/// cavity amplitudes.
///
/// Starts from the dark-state seed and refines the atomic variables by a
/// damped Newton iteration (cavity amplitudes frozen; they are exactly
/// stationary once the drives are chosen).  Steps are Tikhonov-regularized
/// against the exactly marginal directions that appear in degenerate
/// corners such as uncoupled atoms, and are only accepted if they shrink
/// the residual while keeping populations physical.  On success the drives
/// closing the cavity equations are attached and the final residual of the
/// complete system is reported in units of the largest model rate.
pub fn solve_steady_state(p: &ModelParams) -> Result<SteadyState, Error> {
    let scale = p.rate_scale();
    let tol = 1e-12 * scale;
    let mut m = dark_state_seed(p)?;
    let mut res = atomic_residual(p, &m);
    let mut norm = inf_norm(&res);
    let mut iterations = 0usize;

    while norm >= tol && iterations < 200 {
        iterations += 1;
        let jac = newton_jacobian(p, &m);
        // Normal equations with a floor-level Tikhonov term; the
        // regularization only matters when the Jacobian has exact null
        // directions, where it selects the minimum-norm step.
        let jt = jac.transpose();
        let mut jtj = jt * jac;
        let lambda = 1e-12 * (1.0 + jtj.diagonal().iter().fold(0.0_f64, |a, &d| a.max(d)));
        for k in 0..NEWTON_DIM {
            jtj[(k, k)] += lambda;
        }
        let rhs = jt * (-SVector::<f64, NEWTON_DIM>::from(res));
        let step = jtj.lu().solve(&rhs).ok_or(Error::SingularJacobian)?;

        let y = newton_coords(&m);
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let mut y_new = y;
            for k in 0..NEWTON_DIM {
                y_new[k] += t * step[k];
            }
            let m_new = state_from_coords(p, &y_new);
            let res_new = atomic_residual(p, &m_new);
            let norm_new = inf_norm(&res_new);
            if norm_new < norm && m_new.populations_in_bounds(1e-9) {
                m = m_new;
                res = res_new;
                norm = norm_new;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            return Err(Error::NoConvergence {
                iterations,
                residual: norm / scale,
            });
        }
    }
    if norm >= tol {
        return Err(Error::NoConvergence {
            iterations,
            residual: norm / scale,
        });
    }

    let (drive1, drive2) = required_drive(p, &m);
    let full = mean_drift(p, &m, drive1, drive2);
    let residual = full.max_norm() / scale;
    // Negated form on purpose: a NaN residual must land in the error arm.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(residual < 1e-10) {
        return Err(Error::NoConvergence {
            iterations,
            residual,
        });
    }
    Ok(SteadyState {
        mean: m,
        drive1,
        drive2,
        residual,
    })
}
