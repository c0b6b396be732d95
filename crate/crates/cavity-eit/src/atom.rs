//! Single-atom operator algebra and the dissipative generator.
//!
//! Everything atomic in this crate — mean drift, linearized drift and the
//! Langevin diffusion matrix — is produced by one generator so the three
//! stay mutually consistent.  The generator acts on 3x3 operators in the
//! Heisenberg sense: unitary part `i[H, X]` with the mean-field Hamiltonian
//! (cavity amplitudes replaced by c-numbers), plus the adjoint dissipator of
//! the three jump operators: radiative decay into each ground level and
//! ground-state dephasing.

use nalgebra::Matrix3;
use num_complex::Complex64 as C64;

use crate::params::ModelParams;
use crate::semiclassics::MeanState;

/// A 3x3 complex operator on the single-atom Hilbert space
/// (levels ordered excited, ground 1, ground 2).
pub type AtomOp = Matrix3<C64>;

const I: C64 = C64::new(0.0, 1.0);

fn zero() -> AtomOp {
    AtomOp::zeros()
}

/// The transition operator `|i><j|`.
pub fn sigma(i: usize, j: usize) -> AtomOp {
    let mut m = zero();
    m[(i, j)] = C64::new(1.0, 0.0);
    m
}

/// The inversion combination `sigma_00 - sigma_kk` for ground level `k`.
pub fn inversion(k: usize) -> AtomOp {
    assert!(k == 1 || k == 2);
    let mut m = sigma(0, 0);
    m[(k, k)] = C64::new(-1.0, 0.0);
    m
}

/// Single-atom density matrix consistent with a semiclassical mean state.
pub fn density_matrix(m: &MeanState) -> AtomOp {
    let [p00, p11, p22] = m.populations();
    AtomOp::new(
        C64::new(p00, 0.0),
        m.s10,
        m.s20,
        m.s10.conj(),
        C64::new(p11, 0.0),
        m.s21,
        m.s20.conj(),
        m.s21.conj(),
        C64::new(p22, 0.0),
    )
}

/// `tr(rho * x)`.
pub fn expectation(rho: &AtomOp, x: &AtomOp) -> C64 {
    (rho * x).trace()
}

/// Heisenberg-picture generator for one atom in given c-number cavity fields.
#[derive(Debug, Clone)]
pub struct AtomGenerator {
    /// Mean-field Hamiltonian (detuning + coherent coupling terms).
    h: AtomOp,
    /// Jump operators with their rates folded in as square roots.
    jumps: Vec<AtomOp>,
    /// Rate restored to the optical coherences when dephasing is restricted
    /// to the ground coherence (zero in the consistent default).
    optical_relief: f64,
}

impl AtomGenerator {
    /// Builds the generator for cavity amplitudes `a1`, `a2`.
    ///
    /// In the Heisenberg products that define the drift, a cavity creation
    /// operator turns into the conjugate amplitude, so `conj(a_i)` multiplies
    /// the lowering transition and `a_i` the raising one.
    pub fn new(p: &ModelParams, a1: C64, a2: C64) -> Self {
        let g1 = C64::new(p.coupling1, 0.0);
        let g2 = C64::new(p.coupling2, 0.0);
        let delta = C64::new(p.detuning, 0.0);

        let mut h = zero();
        h += (sigma(1, 1) + sigma(2, 2)) * delta;
        h += sigma(1, 0) * (g1 * a1.conj()) + sigma(0, 1) * (g1 * a1);
        h += sigma(2, 0) * (g2 * a2.conj()) + sigma(0, 2) * (g2 * a2);

        let mut jumps = Vec::new();
        if p.atom_decay1 > 0.0 {
            jumps.push(sigma(1, 0) * C64::new(p.atom_decay1.sqrt(), 0.0));
        }
        if p.atom_decay2 > 0.0 {
            jumps.push(sigma(2, 0) * C64::new(p.atom_decay2.sqrt(), 0.0));
        }
        if p.dephasing > 0.0 {
            let z = sigma(1, 1) - sigma(2, 2);
            jumps.push(z * C64::new((p.dephasing / 2.0).sqrt(), 0.0));
        }

        let optical_relief = if p.ground_only_dephasing {
            p.dephasing / 4.0
        } else {
            0.0
        };

        AtomGenerator {
            h,
            jumps,
            optical_relief,
        }
    }

    /// Unitary part `i [H, X]`.
    pub fn apply_hamiltonian(&self, x: &AtomOp) -> AtomOp {
        (self.h * x - x * self.h) * I
    }

    /// Dissipative part: adjoint Lindblad dissipator plus, when dephasing is
    /// restricted to the ground coherence, the term that cancels the induced
    /// optical-coherence decay.
    pub fn apply_dissipator(&self, x: &AtomOp) -> AtomOp {
        let mut out = zero();
        for l in &self.jumps {
            let ld = l.adjoint();
            let ldl = ld * l;
            out += ld * x * l - (ldl * x + x * ldl) * C64::new(0.5, 0.0);
        }
        if self.optical_relief != 0.0 {
            // Project onto the excited-ground coherence components and undo
            // their dephasing-induced decay.
            let pe = sigma(0, 0);
            let pg = sigma(1, 1) + sigma(2, 2);
            let optical = pe * x * pg + pg * x * pe;
            out += optical * C64::new(self.optical_relief, 0.0);
        }
        out
    }

    /// Full generator `i[H, X] +` dissipator.
    pub fn apply(&self, x: &AtomOp) -> AtomOp {
        self.apply_hamiltonian(x) + self.apply_dissipator(x)
    }
}
