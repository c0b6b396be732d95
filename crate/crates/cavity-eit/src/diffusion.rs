//! Noise strengths from the generalized Einstein relations, and the input
//! field correlations.
//!
//! In the Langevin description every dissipation channel is accompanied by
//! a fluctuating force.  For the collective atomic forces the white-noise
//! strengths `<F_x(t) F_y(t')> = D[x, y] delta(t - t')` follow from the
//! generalized Einstein relation: `D[x, y]` is the deficit by which the
//! drift fails the product rule, `<L(xy) - L(x)y - x L(y)>`, evaluated in
//! the stationary single-atom state and scaled by the atom number for the
//! collective operators.  Computing the deficit directly from the same
//! generator that produces the drift keeps drift and diffusion consistent
//! by construction — the pair is what guarantees commutators are preserved
//! by the linearized evolution.
//!
//! The cavity inputs are delta-correlated fields fixed by what is injected:
//! vacuum at the pump port, squeezed vacuum with parameters `(r, phi)` at
//! the probe port.

use num_complex::Complex64 as C64;

use crate::atom::{density_matrix, expectation, inversion, sigma, AtomGenerator, AtomOp};
use crate::order::{Mat12, NoiseVar};
use crate::params::ModelParams;
use crate::semiclassics::MeanState;

/// Number of collective atomic force channels.
pub const ATOMIC_CHANNELS: usize = 8;

/// Per-atom diffusion block, indexed like `NoiseVar::ALL[4..]`.
pub type AtomicDiffusion = nalgebra::SMatrix<C64, ATOMIC_CHANNELS, ATOMIC_CHANNELS>;

/// Single-atom operator whose Langevin equation carries the given atomic
/// force channel; `None` for the cavity input channels.
pub fn force_operator(nv: NoiseVar) -> Option<AtomOp> {
    Some(match nv {
        NoiseVar::F10 => sigma(1, 0),
        NoiseVar::F20 => sigma(2, 0),
        NoiseVar::F21 => sigma(2, 1),
        NoiseVar::FW1 => inversion(1),
        NoiseVar::FW2 => inversion(2),
        NoiseVar::F01 => sigma(0, 1),
        NoiseVar::F02 => sigma(0, 2),
        NoiseVar::F12 => sigma(1, 2),
        _ => return None,
    })
}

/// The Einstein-relation deficit `<L(xy) - L(x)y - x L(y)>` in the state
/// `rho`: the white-noise correlation strength of the forces attached to
/// the equations of `x` and `y`.
pub fn einstein_deficit(gen: &AtomGenerator, rho: &AtomOp, x: &AtomOp, y: &AtomOp) -> C64 {
    let xy = x * y;
    let deficit = gen.apply(&xy) - gen.apply(x) * y - x * gen.apply(y);
    expectation(rho, &deficit)
}

/// Per-atom diffusion matrix over the eight atomic force channels at the
/// working point `m` (the collective strengths are `N` times these).
pub fn atomic_diffusion(p: &ModelParams, m: &MeanState) -> AtomicDiffusion {
    let gen = AtomGenerator::new(p, m.a1, m.a2);
    let rho = density_matrix(m);
    let ops: Vec<AtomOp> = NoiseVar::ALL[4..]
        .iter()
        .map(|&nv| force_operator(nv).expect("atomic channel"))
        .collect();
    AtomicDiffusion::from_fn(|r, c| einstein_deficit(&gen, &rho, &ops[r], &ops[c]))
}

/// Squeezed-vacuum moments of the probe input: photon number
/// `n = sinh^2 r` and anomalous moment `m = -e^{2 i phi} sinh r cosh r`.
/// A minimum-uncertainty input satisfies `(2n+1)^2 - 4|m|^2 = 1`.
pub fn squeeze_moments(p: &ModelParams) -> (f64, C64) {
    let (sh, ch) = (p.squeeze_r.sinh(), p.squeeze_r.cosh());
    let phase = C64::from_polar(1.0, 2.0 * p.squeeze_phi);
    (sh * sh, -phase * sh * ch)
}

/// Correlation matrix of the cavity input channels only (atomic block
/// zero): vacuum at the pump port, squeezed vacuum at the probe port, no
/// cross-port correlations.
pub fn field_correlations(p: &ModelParams) -> Mat12 {
    use NoiseVar::*;
    let (n, m) = squeeze_moments(p);
    let mut c = Mat12::zeros();
    // Pump port: <a_in a_in^dag> = 1 is the only nonzero moment.
    c[(A1In.idx(), A1InDag.idx())] = C64::new(1.0, 0.0);
    // Probe port: squeezed vacuum.
    c[(A2In.idx(), A2InDag.idx())] = C64::new(n + 1.0, 0.0);
    c[(A2InDag.idx(), A2In.idx())] = C64::new(n, 0.0);
    c[(A2In.idx(), A2In.idx())] = m;
    c[(A2InDag.idx(), A2InDag.idx())] = m.conj();
    c
}

/// Full 12x12 correlation matrix of the noise vector at the working point:
/// input-field block plus the collective atomic diffusion block.  Field and
/// atomic noises are uncorrelated — the input fields are external, the
/// atomic forces internal.
pub fn noise_correlations(p: &ModelParams, m: &MeanState) -> Mat12 {
    let mut c = field_correlations(p);
    let d = atomic_diffusion(p, m);
    let n = C64::new(p.n_atoms(), 0.0);
    for r in 0..ATOMIC_CHANNELS {
        for k in 0..ATOMIC_CHANNELS {
            c[(4 + r, 4 + k)] = n * d[(r, k)];
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiclassics::{dark_state_seed, solve_steady_state};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use nalgebra::DMatrix;

    fn max_abs(m: &AtomicDiffusion) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn mixed_state() -> MeanState {
        MeanState {
            a1: C64::new(-120.0, 30.0),
            a2: C64::new(45.0, -10.0),
            s10: C64::new(0.02, -0.01),
            s20: C64::new(-0.01, 0.015),
            s21: C64::new(-0.3, 0.08),
            w1: -0.25,
            w2: -0.45,
        }
    }

    #[test]
    fn hamiltonian_dynamics_produce_no_diffusion() {
        // The commutator obeys the product rule exactly, so a rate-free
        // model must have an identically vanishing deficit.
        let p = ModelParams {
            atom_decay1: 0.0,
            atom_decay2: 0.0,
            dephasing: 0.0,
            detuning: 1.7,
            ..ModelParams::benchmark()
        };
        let d = atomic_diffusion(&p, &mixed_state());
        assert!(
            max_abs(&d) < 1e-14,
            "Hamiltonian leakage {:.3e}",
            max_abs(&d)
        );
    }

    #[test]
    fn identity_carries_no_force() {
        let p = ModelParams {
            dephasing: 3e-4,
            ..ModelParams::benchmark()
        };
        let m = mixed_state();
        let gen = AtomGenerator::new(&p, m.a1, m.a2);
        let rho = density_matrix(&m);
        let id = sigma(0, 0) + sigma(1, 1) + sigma(2, 2);
        for nv in &NoiseVar::ALL[4..] {
            let x = force_operator(*nv).unwrap();
            assert!(einstein_deficit(&gen, &rho, &x, &id).norm() < 1e-14);
            assert!(einstein_deficit(&gen, &rho, &id, &x).norm() < 1e-14);
        }
    }

    #[test]
    fn optical_force_strength_matches_the_hand_formula() {
        // <F10 F01> = G1 p00 + (G1 + G2 + G12/2) p11 for the consistent
        // dephasing jump; the ground-only variant drops the G12/2.
        let p = ModelParams {
            dephasing: 0.02,
            ..ModelParams::benchmark()
        };
        let m = mixed_state();
        let [p00, p11, _] = m.populations();
        let d = atomic_diffusion(&p, &m);
        let r = NoiseVar::F10.idx() - 4;
        let c = NoiseVar::F01.idx() - 4;
        let expected =
            p.atom_decay1 * p00 + (p.atom_decay1 + p.atom_decay2 + p.dephasing / 2.0) * p11;
        assert_relative_eq!(d[(r, c)].re, expected, max_relative = 1e-12);
        assert_abs_diff_eq!(d[(r, c)].im, 0.0, epsilon = 1e-14);

        let p = ModelParams {
            ground_only_dephasing: true,
            ..p
        };
        let d = atomic_diffusion(&p, &m);
        let expected = p.atom_decay1 * p00 + (p.atom_decay1 + p.atom_decay2) * p11;
        assert_relative_eq!(d[(r, c)].re, expected, max_relative = 1e-12);
    }

    #[test]
    fn ground_coherence_force_strength_matches_the_hand_formula() {
        // <F21 F12> = G2 p00 + 2 G12 p22; at the single-drive dark state
        // (all atoms in |2>) this is exactly twice the dephasing rate.
        let p = ModelParams {
            dephasing: 1e-4,
            ..ModelParams::benchmark()
        };
        let m = mixed_state();
        let [p00, _, p22] = m.populations();
        let d = atomic_diffusion(&p, &m);
        let r = NoiseVar::F21.idx() - 4;
        let c = NoiseVar::F12.idx() - 4;
        let expected = p.atom_decay2 * p00 + 2.0 * p.dephasing * p22;
        assert_relative_eq!(d[(r, c)].re, expected, max_relative = 1e-12);

        let dark = solve_steady_state(&p).unwrap();
        let d = atomic_diffusion(&p, &dark.mean);
        assert_relative_eq!(d[(r, c)].re, 2e-4, max_relative = 1e-10);
    }

    #[test]
    fn diffusion_block_is_hermitian_under_the_channel_adjoint() {
        // D[x, y] = conj(D[adj y, adj x]): the force correlations of a pair
        // and of its adjoint pair are complex conjugates.
        let p = ModelParams {
            dephasing: 7e-4,
            detuning: 0.9,
            ..ModelParams::benchmark()
        };
        let m = mixed_state();
        let d = atomic_diffusion(&p, &m);
        for nv_r in &NoiseVar::ALL[4..] {
            for nv_c in &NoiseVar::ALL[4..] {
                let lhs = d[(nv_r.idx() - 4, nv_c.idx() - 4)];
                let rhs = d[(nv_c.adjoint().idx() - 4, nv_r.adjoint().idx() - 4)].conj();
                assert!(
                    (lhs - rhs).norm() < 1e-13 * lhs.norm().max(1.0),
                    "pair ({nv_r:?}, {nv_c:?}): {lhs} vs {rhs}"
                );
            }
        }
    }

    /// Independent oracle: build the Schrodinger-picture Lindblad
    /// superoperator as an explicit 9x9 matrix on vectorized operators,
    /// take its Hilbert-Schmidt adjoint to get the Heisenberg generator,
    /// and evaluate the deficit with matrix-vector algebra only.
    #[test]
    fn deficit_agrees_with_a_vectorized_superoperator_oracle() {
        let p = ModelParams {
            dephasing: 4e-4,
            detuning: 0.6,
            ..ModelParams::benchmark()
        };
        let m = mixed_state();

        // vec(A X B) = (B^T kron A) vec(X), column-major vectorization.
        let kron = |b_t: &AtomOp, a: &AtomOp| -> DMatrix<C64> {
            let mut out = DMatrix::<C64>::zeros(9, 9);
            for bi in 0..3 {
                for bj in 0..3 {
                    for ai in 0..3 {
                        for aj in 0..3 {
                            out[(3 * bi + ai, 3 * bj + aj)] = b_t[(bi, bj)] * a[(ai, aj)];
                        }
                    }
                }
            }
            out
        };
        let vec_op = |x: &AtomOp| -> nalgebra::DVector<C64> {
            nalgebra::DVector::from_fn(9, |k, _| x[(k % 3, k / 3)])
        };
        let unvec = |v: &nalgebra::DVector<C64>| -> AtomOp { AtomOp::from_fn(|i, j| v[3 * j + i]) };
        let id = AtomOp::identity();

        // Schrodinger generator matrix.
        let g1 = C64::new(p.coupling1, 0.0);
        let g2 = C64::new(p.coupling2, 0.0);
        let delta = C64::new(p.detuning, 0.0);
        let h = (sigma(1, 1) + sigma(2, 2)) * delta
            + sigma(1, 0) * (g1 * m.a1.conj())
            + sigma(0, 1) * (g1 * m.a1)
            + sigma(2, 0) * (g2 * m.a2.conj())
            + sigma(0, 2) * (g2 * m.a2);
        let i = C64::new(0.0, 1.0);
        let mut sup = kron(&h.transpose(), &id) * i - kron(&id, &h) * i;
        let jumps = [
            sigma(1, 0) * C64::new(p.atom_decay1.sqrt(), 0.0),
            sigma(2, 0) * C64::new(p.atom_decay2.sqrt(), 0.0),
            (sigma(1, 1) - sigma(2, 2)) * C64::new((p.dephasing / 2.0).sqrt(), 0.0),
        ];
        for l in jumps {
            let ld = l.adjoint();
            let ldl = ld * l;
            sup += kron(&ld.transpose(), &l)
                - (kron(&id, &ldl) + kron(&ldl.transpose(), &id)) * C64::new(0.5, 0.0);
        }
        // Heisenberg generator = Hilbert-Schmidt adjoint.
        let heis = sup.adjoint();

        let apply = |x: &AtomOp| -> AtomOp { unvec(&(&heis * vec_op(x))) };
        let rho = density_matrix(&m);
        let gen = AtomGenerator::new(&p, m.a1, m.a2);
        let mut checked = 0;
        for nv_r in &NoiseVar::ALL[4..] {
            for nv_c in &NoiseVar::ALL[4..] {
                let x = force_operator(*nv_r).unwrap();
                let y = force_operator(*nv_c).unwrap();
                let xy = x * y;
                let oracle = expectation(&rho, &(apply(&xy) - apply(&x) * y - x * apply(&y)));
                let direct = einstein_deficit(&gen, &rho, &x, &y);
                assert!(
                    (oracle - direct).norm() < 1e-12 * oracle.norm().max(1.0),
                    "pair ({nv_r:?}, {nv_c:?}): oracle {oracle} vs direct {direct}"
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 64);
    }

    #[test]
    fn squeezed_probe_block_has_the_frozen_benchmark_moments() {
        let p = ModelParams::benchmark();
        let (n, m) = squeeze_moments(&p);
        assert_relative_eq!(n, 13.154116418008244, max_relative = 1e-12);
        assert_relative_eq!(m.re, -13.644958598563876, max_relative = 1e-12);
        assert_abs_diff_eq!(m.im, 0.0, epsilon = 1e-12);
        let c = field_correlations(&p);
        assert_relative_eq!(
            c[(NoiseVar::A2In.idx(), NoiseVar::A2InDag.idx())].re,
            n + 1.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            c[(NoiseVar::A2InDag.idx(), NoiseVar::A2In.idx())].re,
            n,
            max_relative = 1e-14
        );
        // Pump port is plain vacuum.
        assert_relative_eq!(
            c[(NoiseVar::A1In.idx(), NoiseVar::A1InDag.idx())].re,
            1.0,
            max_relative = 1e-15
        );
        assert_abs_diff_eq!(
            c[(NoiseVar::A1InDag.idx(), NoiseVar::A1In.idx())].norm(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn squeezed_input_is_minimum_uncertainty_for_any_r_and_phi() {
        for r in [0.0, 0.3, 1.0, 2.0] {
            for phi in [0.0, 0.4, 1.2, 2.9] {
                let p = ModelParams {
                    squeeze_r: r,
                    squeeze_phi: phi,
                    ..ModelParams::benchmark()
                };
                let (n, m) = squeeze_moments(&p);
                let det = (2.0 * n + 1.0).powi(2) - 4.0 * m.norm_sqr();
                assert_relative_eq!(det, 1.0, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn full_correlation_matrix_scales_the_atomic_block_by_atom_number() {
        let p = ModelParams {
            dephasing: 1e-4,
            ..ModelParams::benchmark()
        };
        let m = dark_state_seed(&p).unwrap();
        let c = noise_correlations(&p, &m);
        let d = atomic_diffusion(&p, &m);
        let r = NoiseVar::F21.idx();
        let k = NoiseVar::F12.idx();
        assert_relative_eq!(
            c[(r, k)].re,
            p.n_atoms() * d[(r - 4, k - 4)].re,
            max_relative = 1e-14
        );
        // Field-atom cross blocks vanish identically.
        for fr in 0..4 {
            for ac in 4..12 {
                assert_eq!(c[(fr, ac)], C64::new(0.0, 0.0));
                assert_eq!(c[(ac, fr)], C64::new(0.0, 0.0));
            }
        }
    }
}
