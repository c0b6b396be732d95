//! Closed-form limiting expressions for the output noise spectra.
//!
//! In the regime where the cavity is much slower than the atoms and the
//! collective cooperativity is large, the full linear-response problem
//! collapses to a handful of algebraic formulas: the polariton peak
//! positions, the probe-port spectra as functions of the scaled two-photon
//! detuning, the quadrature values at the rotation peak, and the
//! zero-frequency spectrum in the presence of ground-state decoherence.
//! These are the independent yardsticks the numerical engine is tested
//! against; they are deliberately implemented from the printed formulas
//! with no shared code.
//!
//! Frequencies returned or accepted here are in the same units as the
//! input rates.  Inside the formulas the natural scales are the scaled
//! detuning `delta_c = delta / C` (with `C = g^2 N / gamma` the collective
//! cooperativity) and the scaled frequency `omega / gamma`.

use crate::error::Error;
use crate::params::ModelParams;

/// Reduced parameter set the closed forms are written in.
///
/// Construct it directly for formula work, or with [`from_params`] to pull
/// the numbers out of a full model definition (which also enforces the
/// symmetry assumptions the formulas are derived under).
///
/// [`from_params`]: ClosedFormInput::from_params
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormInput {
    /// Common cavity (energy) decay rate of the two modes.
    pub gamma: f64,
    /// Common spontaneous-emission rate of the two optical transitions.
    pub gamma_opt: f64,
    /// Ground-state dephasing rate.
    pub dephasing: f64,
    /// Magnitude of the common atom-field coupling.
    pub coupling: f64,
    /// Number of atoms.
    pub atom_count: f64,
    /// Two-photon detuning.
    pub delta: f64,
    /// Collective cooperativity `C = g^2 N / gamma`.
    pub cooperativity: f64,
    /// Scaled two-photon detuning `delta / C`.
    pub delta_c: f64,
    /// Rabi frequency `|g alpha_1|` of the pump arm.
    pub rabi1: f64,
    /// Rabi frequency `|g alpha_2|` of the probe arm.
    pub rabi2: f64,
    /// Squeezing parameter of the probe input.
    pub squeeze_r: f64,
}

impl ClosedFormInput {
    /// Extracts the reduced parameters from a full model definition.
    ///
    /// The closed forms assume the two modes decay at the same rate and the
    /// two optical transitions share one spontaneous-emission rate; unequal
    /// values are reported as [`Error::Domain`].  Unequal couplings are
    /// rejected by the underlying derived-quantity computation.
    pub fn from_params(p: &ModelParams) -> Result<Self, Error> {
        let p = p.clone().validated()?;
        let derived = p.derived()?;
        if p.cavity_decay1 != p.cavity_decay2 {
            return Err(Error::Domain {
                what: format!(
                    "closed forms assume equal cavity decays (got {} and {})",
                    p.cavity_decay1, p.cavity_decay2
                ),
            });
        }
        if p.atom_decay1 != p.atom_decay2 {
            return Err(Error::Domain {
                what: format!(
                    "closed forms assume equal optical decays (got {} and {})",
                    p.atom_decay1, p.atom_decay2
                ),
            });
        }
        if p.cavity_decay2 == 0.0 {
            return Err(Error::Domain {
                what: "closed forms need a nonzero cavity decay".into(),
            });
        }
        Ok(ClosedFormInput {
            gamma: p.cavity_decay2,
            gamma_opt: p.atom_decay2,
            dephasing: p.dephasing,
            coupling: p.coupling2.abs(),
            atom_count: p.n_atoms(),
            delta: p.detuning,
            cooperativity: derived.cooperativity,
            delta_c: derived.delta_c,
            rabi1: derived.rabi1.norm(),
            rabi2: derived.rabi2.norm(),
            squeeze_r: p.squeeze_r,
        })
    }

    /// Lists the regime assumptions the current numbers violate.
    ///
    /// The closed forms are leading-order results; they stay quantitative
    /// only while the cavity is slow, the collective coupling dominates,
    /// and dephasing is perturbative.  An empty list means all checks pass.
    pub fn validity(&self) -> Vec<&'static str> {
        let mut notes = Vec::new();
        if self.gamma >= 0.5 * self.gamma_opt {
            notes.push("cavity decay is not small compared with the optical linewidth");
        }
        if self.cooperativity <= 10.0 {
            notes.push("collective cooperativity is not large");
        }
        let collective = self.coupling * self.atom_count.sqrt();
        if self.rabi1.max(self.rabi2) >= 0.5 * collective {
            notes.push("drive Rabi frequency is not small compared with the collective coupling");
        }
        if self.dephasing >= 0.1 * self.gamma {
            notes.push("ground-state dephasing is not perturbative on the cavity scale");
        }
        notes
    }
}

/// Denominator shared by the probe-port limit spectra.
fn m_denominator(delta_c: f64, omega_gamma: f64) -> f64 {
    let w2 = omega_gamma * omega_gamma;
    16.0 + (4.0 * w2 + 1.0).powi(2) * delta_c.powi(4) + 8.0 * (1.0 - 4.0 * w2) * delta_c * delta_c
}

/// Frequency of the upper (polariton) noise peak,
/// `(delta + sqrt(4 (Omega_1^2 + Omega_2^2) + 4 N g^2 + delta^2)) / 2`.
///
/// With only the pump arm driven the square root carries `4 Omega^2`; with
/// both arms driven at equal strength it carries `8 Omega^2`.
pub fn upper_peak_frequency(input: &ClosedFormInput) -> f64 {
    let drive = 4.0 * (input.rabi1 * input.rabi1 + input.rabi2 * input.rabi2);
    let collective = 4.0 * input.atom_count * input.coupling * input.coupling;
    0.5 * (input.delta + (drive + collective + input.delta * input.delta).sqrt())
}

/// Frequency of the lower (rotation) noise peak,
/// `gamma sqrt(4 - delta_c^2) / (2 delta_c)`, defined for `0 < delta_c < 2`.
pub fn lower_peak_frequency(input: &ClosedFormInput) -> Result<f64, Error> {
    let dc = input.delta_c;
    if !(dc > 0.0 && dc < 2.0) {
        return Err(Error::Domain {
            what: format!("the lower noise peak exists only for 0 < delta/C < 2 (got {dc})"),
        });
    }
    Ok(input.gamma * (4.0 - dc * dc).sqrt() / (2.0 * dc))
}

/// Probe-port quadrature spectrum in the slow-cavity limit when only the
/// pump arm is classically driven.
///
/// `theta` is the quadrature angle, `omega` the frequency in the same units
/// as the rates.  Reduces to exactly 1 for a vacuum probe input
/// (`squeeze_r = 0`) at every frequency and angle.
pub fn vacuum_probe_limit_spectrum(input: &ClosedFormInput, theta: f64, omega: f64) -> f64 {
    let dc = input.delta_c;
    let wg = omega / input.gamma;
    let p = dc * dc * (4.0 * wg * wg + 1.0) - 4.0;
    let q = 4.0 * dc;
    let (sin, cos) = theta.sin_cos();
    let soft = 2.0 * input.squeeze_r;
    ((-soft).exp() * (cos * p - sin * q).powi(2) + soft.exp() * (cos * q + sin * p).powi(2))
        / m_denominator(dc, wg)
}

/// Probe-port spectrum of the `theta = 0` quadrature in the slow-cavity
/// limit with both arms driven at equal strength.
///
/// Reduces to exactly 1 for a vacuum probe input, approaches
/// `exp(-2 r)` far above the rotation peak, and equals `cosh^2 r` at the
/// rotation peak itself.
pub fn driven_probe_limit_spectrum_theta0(input: &ClosedFormInput, omega: f64) -> f64 {
    let dc2 = input.delta_c * input.delta_c;
    let wg = omega / input.gamma;
    let w2 = wg * wg;
    let a = 4.0 * w2 + 1.0;
    let soft = 2.0 * input.squeeze_r;
    let numerator = 4.0 * soft.exp() * a * dc2
        + 4.0 * (a * dc2 + 4.0)
        + (-soft).exp() * (a.powi(3) * dc2 * dc2 - 32.0 * (4.0 * w2 * w2 + w2) * dc2 + 64.0 * w2);
    numerator / (a * m_denominator(input.delta_c, wg))
}

/// Probe- and pump-port quadrature values exactly at the rotation peak with
/// both arms driven: `(S_probe(theta), S_pump(theta))`, where
/// `S_probe = ((e^r + e^{-r})^2 + (e^{2r} - e^{-2r}) sin(theta) cos(theta) delta_c) / 4`
/// and the pump value is the probe value at `theta + pi/2`.
pub fn rotation_peak_values(input: &ClosedFormInput, theta: f64) -> Result<(f64, f64), Error> {
    let dc = input.delta_c;
    if !(dc > 0.0 && dc < 2.0) {
        return Err(Error::Domain {
            what: format!("the rotation peak exists only for 0 < delta/C < 2 (got {dc})"),
        });
    }
    let r = input.squeeze_r;
    let base = (r.exp() + (-r).exp()).powi(2);
    let swing = (2.0 * r).exp() - (-2.0 * r).exp();
    let value = |t: f64| 0.25 * (base + swing * t.sin() * t.cos() * dc);
    Ok((value(theta), value(theta + std::f64::consts::FRAC_PI_2)))
}

/// Frequency at which the injected squeezing has fully swapped from the
/// probe to the pump port on resonance:
/// `gamma Omega / (sqrt(2) sqrt(g^2 N / Gamma + 2 Omega^2))`.
pub fn squeezing_exchange_frequency(input: &ClosedFormInput) -> Result<f64, Error> {
    if input.rabi1 <= 0.0 {
        return Err(Error::Domain {
            what: "the squeezing-exchange frequency needs a driven pump arm".into(),
        });
    }
    if input.gamma_opt <= 0.0 {
        return Err(Error::Domain {
            what: "the squeezing-exchange frequency needs a nonzero optical decay".into(),
        });
    }
    let stark = input.coupling * input.coupling * input.atom_count / input.gamma_opt;
    Ok(input.gamma * input.rabi1 / (2.0 * (stark + 2.0 * input.rabi1 * input.rabi1)).sqrt())
}

/// Zero-frequency probe spectrum including ground-state decoherence, for
/// the principal quadrature angles (`theta` a multiple of `pi/2`).
///
/// The antisqueezed angle is obtained from the squeezed one by flipping the
/// sign of `r`; other angles are outside the formula's domain.
pub fn decoherence_spectrum_dc(input: &ClosedFormInput, theta: f64) -> Result<f64, Error> {
    let (sin, cos) = theta.sin_cos();
    let r = if sin.abs() < 1e-9 {
        input.squeeze_r
    } else if cos.abs() < 1e-9 {
        -input.squeeze_r
    } else {
        return Err(Error::Domain {
            what: format!(
                "the zero-frequency decoherence formula covers only the principal \
                 quadratures (got theta = {theta})"
            ),
        });
    };
    let c = input.cooperativity;
    let d = input.delta;
    let g12 = input.dephasing;
    let gam = input.gamma_opt;
    let omega2 = input.rabi1 * input.rabi1;
    let b = d * d * g12 * g12 + (omega2 + 2.0 * c * g12 + gam * g12).powi(2);
    let anti = 16.0 * (2.0 * r).exp() * c * c * d * d * g12.powi(4);
    let kept = (-2.0 * r).exp()
        * (omega2 * omega2 - 4.0 * c * c * g12 * g12
            + 2.0 * omega2 * gam * g12
            + (gam * gam + d * d) * g12 * g12)
            .powi(2);
    let floor = 8.0 * c * g12 * (omega2 + gam * g12);
    Ok((anti + kept) / (b * b) + floor / b)
}
