//! Model parameters and the reduced quantities derived from them.

use num_complex::Complex64 as C64;

use crate::error::Error;

/// Physical parameters of the driven two-mode cavity with `N` three-level
/// lambda atoms.
///
/// Level 0 is the excited state; levels 1 and 2 are the ground states.  Mode
/// `i` couples the 0-i transition with constant `coupling_i` and decays at
/// `cavity_decay_i`.  Both modes share the same two-photon detuning
/// `detuning` relative to their atomic transitions.  The excited state decays
/// radiatively into ground level `i` at `atom_decay_i`, and the ground-state
/// coherence dephases at `dephasing`.
///
/// All rates and frequencies are in one common unit chosen by the caller;
/// the library never fixes a time scale.  `alpha1`/`alpha2` are the *target*
/// intracavity mean amplitudes — the classical drive amplitudes required to
/// sustain them are an output of the steady-state solve, not an input.
///
/// The incoming field of mode 1 (the pump) is a coherent state; the incoming
/// field of mode 2 (the probe) is a broadband squeezed vacuum with squeeze
/// parameter `squeeze_r` and phase `squeeze_phi` (possibly displaced, when
/// `alpha2 != 0`).
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    /// Radiative decay rate of the excited level into ground level 1.
    pub atom_decay1: f64,
    /// Radiative decay rate of the excited level into ground level 2.
    pub atom_decay2: f64,
    /// Dephasing rate of the ground-state coherence.
    pub dephasing: f64,
    /// Energy decay rate of cavity mode 1 (pump).
    pub cavity_decay1: f64,
    /// Energy decay rate of cavity mode 2 (probe).
    pub cavity_decay2: f64,
    /// Atom-field coupling of mode 1; may be negative.
    pub coupling1: f64,
    /// Atom-field coupling of mode 2; may be negative.
    pub coupling2: f64,
    /// Two-photon detuning shared by both modes.
    pub detuning: f64,
    /// Number of atoms.
    pub atom_count: u64,
    /// Target mean amplitude of mode 1.
    pub alpha1: C64,
    /// Target mean amplitude of mode 2.
    pub alpha2: C64,
    /// Squeeze parameter of the probe input.
    pub squeeze_r: f64,
    /// Squeeze phase of the probe input.
    pub squeeze_phi: f64,
    /// When `true`, ground-state dephasing decays the ground coherence only
    /// and leaves the optical coherences untouched.  The default (`false`)
    /// uses the dephasing jump operator consistently, which also broadens
    /// each optical coherence by a quarter of `dephasing`; the difference is
    /// far below the radiative linewidth for any weak dephasing of interest.
    pub ground_only_dephasing: bool,
}

/// Reduced quantities that control the shape of the spectra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedQuantities {
    /// Collective cooperativity-type rate `C = g^2 N / cavity_decay`
    /// (carries units of a rate).
    pub cooperativity: f64,
    /// Two-photon detuning measured against `C`: `delta_c = detuning / C`.
    pub delta_c: f64,
    /// Coherent coupling amplitude of mode 1, `coupling1 * alpha1`.
    pub rabi1: C64,
    /// Coherent coupling amplitude of mode 2, `coupling2 * alpha2`.
    pub rabi2: C64,
}

impl ModelParams {
    /// Checks hard constraints and returns the parameters unchanged.
    ///
    /// Rates must be finite and non-negative and there must be at least one
    /// atom.  Soft regime hints are reported by [`ModelParams::warnings`]
    /// instead of failing here.
    pub fn validated(self) -> Result<Self, Error> {
        let rates: [(&'static str, f64); 5] = [
            ("atom_decay1", self.atom_decay1),
            ("atom_decay2", self.atom_decay2),
            ("dephasing", self.dephasing),
            ("cavity_decay1", self.cavity_decay1),
            ("cavity_decay2", self.cavity_decay2),
        ];
        for (name, value) in rates {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::NegativeRate { name, value });
            }
        }
        for (name, value) in [
            ("coupling1", self.coupling1),
            ("coupling2", self.coupling2),
            ("detuning", self.detuning),
            ("squeeze_r", self.squeeze_r),
            ("squeeze_phi", self.squeeze_phi),
        ] {
            if !value.is_finite() {
                return Err(Error::NegativeRate { name, value });
            }
        }
        if self.atom_count < 1 {
            return Err(Error::ZeroAtoms);
        }
        Ok(self)
    }

    /// Soft validity hints for the small-noise treatment.  Empty when the
    /// parameters look comfortably inside the regime the linearization
    /// assumes.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.atom_decay1 != self.atom_decay2 {
            w.push(format!(
                "radiative rates differ ({} vs {}); the closed-form benchmarks assume a symmetric atom",
                self.atom_decay1, self.atom_decay2
            ));
        }
        if self.cavity_decay1 != self.cavity_decay2 {
            w.push(format!(
                "cavity decay rates differ ({} vs {}); the closed-form benchmarks assume symmetric modes",
                self.cavity_decay1, self.cavity_decay2
            ));
        }
        if self.atom_count < 1000 {
            w.push(format!(
                "atom count {} is small; collective noise is treated to leading order in 1/N",
                self.atom_count
            ));
        }
        for (name, a) in [("alpha1", self.alpha1), ("alpha2", self.alpha2)] {
            let n = a.norm_sqr();
            if n > 0.0 && n < 100.0 {
                w.push(format!(
                    "|{name}|^2 = {n:.3} is not large; the small-noise expansion assumes a strong mean field"
                ));
            }
        }
        w
    }

    /// Number of atoms as a floating-point scale factor.
    pub fn n_atoms(&self) -> f64 {
        self.atom_count as f64
    }

    /// The canonical single-drive benchmark configuration: a million atoms
    /// at cooperativity `C ~ 417`, the pump mode holding 4x10^4 photons, the
    /// probe in a squeezed vacuum with `r = 2`, and no decoherence.  Rates
    /// are in units of the radiative linewidth.  Used as the reference point
    /// throughout the tests and the guide; adjust fields with struct-update
    /// syntax to explore around it.
    pub fn benchmark() -> Self {
        ModelParams {
            atom_decay1: 1.0,
            atom_decay2: 1.0,
            dephasing: 0.0,
            cavity_decay1: 0.06,
            cavity_decay2: 0.06,
            coupling1: -0.005,
            coupling2: -0.005,
            detuning: 0.0,
            atom_count: 1_000_000,
            alpha1: C64::new(-200.0, 0.0),
            alpha2: C64::new(0.0, 0.0),
            squeeze_r: 2.0,
            squeeze_phi: 0.0,
            ground_only_dephasing: false,
        }
    }

    /// Largest rate-like scale in the problem, used to normalize residuals
    /// and stability thresholds.  Falls back to 1 for the all-zero corner.
    pub fn rate_scale(&self) -> f64 {
        let s = [
            self.atom_decay1,
            self.atom_decay2,
            self.dephasing,
            self.cavity_decay1,
            self.cavity_decay2,
            self.detuning.abs(),
            (self.coupling1 * self.alpha1.norm()).abs(),
            (self.coupling2 * self.alpha2.norm()).abs(),
        ]
        .into_iter()
        .fold(0.0_f64, f64::max);
        if s > 0.0 {
            s
        } else {
            1.0
        }
    }

    /// Reduced quantities.  Refuses asymmetric couplings, for which no single
    /// `C` exists; the cavity decay entering `C` is the probe mode's, which
    /// is the mode the reduced spectra describe (all benchmark configurations
    /// are symmetric anyway).
    pub fn derived(&self) -> Result<DerivedQuantities, Error> {
        if self.coupling1 != self.coupling2 {
            return Err(Error::AsymmetricCoupling {
                g1: self.coupling1,
                g2: self.coupling2,
            });
        }
        let g = self.coupling1;
        let cooperativity = g * g * self.n_atoms() / self.cavity_decay2;
        Ok(DerivedQuantities {
            cooperativity,
            delta_c: self.detuning / cooperativity,
            rabi1: self.alpha1 * self.coupling1,
            rabi2: self.alpha2 * self.coupling2,
        })
    }
}
