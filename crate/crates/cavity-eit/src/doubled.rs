//! The collective equations of motion on the doubled variable set.
//!
//! The mean-field equations close on twelve c-number coordinates once an
//! operator and its adjoint are treated as independent: two cavity
//! amplitudes, five collective atomic variables and the five adjoints (the
//! inversions are self-adjoint).  This module evaluates that polynomial
//! vector field and its exact Jacobian.  Everything downstream — Newton
//! steps, the fluctuation drift matrix, finite-difference cross-checks —
//! derives from these two functions, so they are the single place the
//! equations of motion are spelled out in collective form.
//!
//! Conventions: the radiative repopulation term is proportional to
//! `N + W1 + W2` (three times the collective excited population), optical
//! coherences decay at half the total radiative rate plus — unless
//! dephasing is restricted to the ground coherence — a quarter of the
//! dephasing rate, and the ground coherence decays at exactly the dephasing
//! rate.

use num_complex::Complex64 as C64;

use crate::order::{FluctVar, Mat12, DIM};
use crate::params::ModelParams;
use crate::semiclassics::MeanState;

const I: C64 = C64::new(0.0, 1.0);

/// Decay rate of the optical coherences.
pub(crate) fn optical_decay(p: &ModelParams) -> f64 {
    let base = (p.atom_decay1 + p.atom_decay2) / 2.0;
    if p.ground_only_dephasing {
        base
    } else {
        base + p.dephasing / 4.0
    }
}

/// Packs a semiclassical mean state into the doubled collective vector
/// (atomic entries are multiplied by the atom number, adjoint slots filled
/// with conjugates).
pub fn doubled_from_mean(p: &ModelParams, m: &MeanState) -> [C64; DIM] {
    let n = C64::new(p.n_atoms(), 0.0);
    let mut x = [C64::new(0.0, 0.0); DIM];
    x[FluctVar::A1.idx()] = m.a1;
    x[FluctVar::A2.idx()] = m.a2;
    x[FluctVar::S10.idx()] = n * m.s10;
    x[FluctVar::S20.idx()] = n * m.s20;
    x[FluctVar::S21.idx()] = n * m.s21;
    x[FluctVar::W1.idx()] = n * C64::new(m.w1, 0.0);
    x[FluctVar::W2.idx()] = n * C64::new(m.w2, 0.0);
    x[FluctVar::A1Dag.idx()] = m.a1.conj();
    x[FluctVar::A2Dag.idx()] = m.a2.conj();
    x[FluctVar::S01.idx()] = n * m.s10.conj();
    x[FluctVar::S02.idx()] = n * m.s20.conj();
    x[FluctVar::S12.idx()] = n * m.s21.conj();
    x
}

/// Time derivative of the doubled collective vector under classical drive
/// amplitudes `drive1`, `drive2` feeding the two modes.
///
/// The coordinates are treated as independent; nothing here assumes the
/// adjoint slots hold conjugate values, which is exactly what makes this
/// function differentiable coordinate by coordinate.
pub fn collective_drift(p: &ModelParams, x: &[C64; DIM], drive1: C64, drive2: C64) -> [C64; DIM] {
    use FluctVar::*;
    let g1 = C64::new(p.coupling1, 0.0);
    let g2 = C64::new(p.coupling2, 0.0);
    let n = C64::new(p.n_atoms(), 0.0);
    let gc = C64::new(-optical_decay(p), p.detuning);
    let g12 = C64::new(p.dephasing, 0.0);
    let gw1 = C64::new((2.0 * p.atom_decay1 + p.atom_decay2) / 3.0, 0.0);
    let gw2 = C64::new((p.atom_decay1 + 2.0 * p.atom_decay2) / 3.0, 0.0);
    let half1 = C64::new(p.cavity_decay1 / 2.0, 0.0);
    let half2 = C64::new(p.cavity_decay2 / 2.0, 0.0);
    let root1 = C64::new(p.cavity_decay1.sqrt(), 0.0);
    let root2 = C64::new(p.cavity_decay2.sqrt(), 0.0);

    let v = |k: FluctVar| x[k.idx()];
    let excited3 = n + v(W1) + v(W2);

    let mut f = [C64::new(0.0, 0.0); DIM];
    f[A1.idx()] = -I * g1 * v(S10) - half1 * v(A1) + root1 * drive1;
    f[A2.idx()] = -I * g2 * v(S20) - half2 * v(A2) + root2 * drive2;
    f[S10.idx()] = gc * v(S10) + I * g1 * v(W1) * v(A1) - I * g2 * v(S12) * v(A2);
    f[S20.idx()] = gc * v(S20) + I * g2 * v(W2) * v(A2) - I * g1 * v(S21) * v(A1);
    f[S21.idx()] = -g12 * v(S21) - I * g1 * v(A1Dag) * v(S20) + I * g2 * v(S01) * v(A2);
    f[W1.idx()] = -gw1 * excited3
        - I * g1 * (v(S01) * v(A1) - v(A1Dag) * v(S10)) * 2.0
        - I * g2 * (v(S02) * v(A2) - v(A2Dag) * v(S20));
    f[W2.idx()] = -gw2 * excited3
        - I * g1 * (v(S01) * v(A1) - v(A1Dag) * v(S10))
        - I * g2 * (v(S02) * v(A2) - v(A2Dag) * v(S20)) * 2.0;
    f[A1Dag.idx()] = I * g1 * v(S01) - half1 * v(A1Dag) + root1 * drive1.conj();
    f[A2Dag.idx()] = I * g2 * v(S02) - half2 * v(A2Dag) + root2 * drive2.conj();
    f[S01.idx()] = gc.conj() * v(S01) - I * g1 * v(W1) * v(A1Dag) + I * g2 * v(S21) * v(A2Dag);
    f[S02.idx()] = gc.conj() * v(S02) - I * g2 * v(W2) * v(A2Dag) + I * g1 * v(S12) * v(A1Dag);
    f[S12.idx()] = -g12 * v(S12) + I * g1 * v(A1) * v(S02) - I * g2 * v(S10) * v(A2Dag);
    f
}

/// Exact Jacobian of [`collective_drift`] at `x` (drives are additive
/// constants and do not appear).
///
/// Every row is the coordinate-wise derivative of the corresponding drift
/// component, valid at arbitrary points of the doubled space.  At
/// conjugate-consistent points — adjoint slots holding the conjugates, as
/// at any physical stationary state — the matrix additionally satisfies the
/// mirror symmetry `J[adj r, adj c] = conj(J[r, c])`, which the tests
/// check; away from such points the two sides genuinely differ.
pub fn collective_jacobian(p: &ModelParams, x: &[C64; DIM]) -> Mat12 {
    use FluctVar::*;
    let g1 = C64::new(p.coupling1, 0.0);
    let g2 = C64::new(p.coupling2, 0.0);
    let gc = C64::new(-optical_decay(p), p.detuning);
    let g12 = C64::new(p.dephasing, 0.0);
    let gw1 = C64::new((2.0 * p.atom_decay1 + p.atom_decay2) / 3.0, 0.0);
    let gw2 = C64::new((p.atom_decay1 + 2.0 * p.atom_decay2) / 3.0, 0.0);
    let half1 = C64::new(p.cavity_decay1 / 2.0, 0.0);
    let half2 = C64::new(p.cavity_decay2 / 2.0, 0.0);

    let v = |k: FluctVar| x[k.idx()];
    let mut j = Mat12::zeros();
    let mut set = |r: FluctVar, c: FluctVar, val: C64| j[(r.idx(), c.idx())] = val;

    set(A1, A1, -half1);
    set(A1, S10, -I * g1);
    set(A2, A2, -half2);
    set(A2, S20, -I * g2);

    set(S10, S10, gc);
    set(S10, W1, I * g1 * v(A1));
    set(S10, A1, I * g1 * v(W1));
    set(S10, S12, -I * g2 * v(A2));
    set(S10, A2, -I * g2 * v(S12));

    set(S20, S20, gc);
    set(S20, W2, I * g2 * v(A2));
    set(S20, A2, I * g2 * v(W2));
    set(S20, S21, -I * g1 * v(A1));
    set(S20, A1, -I * g1 * v(S21));

    set(S21, S21, -g12);
    set(S21, S20, -I * g1 * v(A1Dag));
    set(S21, A1Dag, -I * g1 * v(S20));
    set(S21, S01, I * g2 * v(A2));
    set(S21, A2, I * g2 * v(S01));

    set(W1, W1, -gw1);
    set(W1, W2, -gw1);
    set(W1, S01, -I * g1 * v(A1) * 2.0);
    set(W1, A1, -I * g1 * v(S01) * 2.0);
    set(W1, S10, I * g1 * v(A1Dag) * 2.0);
    set(W1, A1Dag, I * g1 * v(S10) * 2.0);
    set(W1, S02, -I * g2 * v(A2));
    set(W1, A2, -I * g2 * v(S02));
    set(W1, S20, I * g2 * v(A2Dag));
    set(W1, A2Dag, I * g2 * v(S20));

    set(W2, W1, -gw2);
    set(W2, W2, -gw2);
    set(W2, S01, -I * g1 * v(A1));
    set(W2, A1, -I * g1 * v(S01));
    set(W2, S10, I * g1 * v(A1Dag));
    set(W2, A1Dag, I * g1 * v(S10));
    set(W2, S02, -I * g2 * v(A2) * 2.0);
    set(W2, A2, -I * g2 * v(S02) * 2.0);
    set(W2, S20, I * g2 * v(A2Dag) * 2.0);
    set(W2, A2Dag, I * g2 * v(S20) * 2.0);

    set(A1Dag, A1Dag, -half1);
    set(A1Dag, S01, I * g1);
    set(A2Dag, A2Dag, -half2);
    set(A2Dag, S02, I * g2);

    set(S01, S01, gc.conj());
    set(S01, W1, -I * g1 * v(A1Dag));
    set(S01, A1Dag, -I * g1 * v(W1));
    set(S01, S21, I * g2 * v(A2Dag));
    set(S01, A2Dag, I * g2 * v(S21));

    set(S02, S02, gc.conj());
    set(S02, W2, -I * g2 * v(A2Dag));
    set(S02, A2Dag, -I * g2 * v(W2));
    set(S02, S12, I * g1 * v(A1Dag));
    set(S02, A1Dag, I * g1 * v(S12));

    set(S12, S12, -g12);
    set(S12, S02, I * g1 * v(A1));
    set(S12, A1, I * g1 * v(S02));
    set(S12, S10, -I * g2 * v(A2Dag));
    set(S12, A2Dag, -I * g2 * v(S10));

    j
}
