//! Acceptance gates for the simulator.
//!
//! Each test pins one headline behavior at a fixed tolerance, so the whole
//! file doubles as a statement of what the crate promises.  Tolerances are
//! deliberate: identities that hold to rounding get rounding-sized bounds,
//! asymptotic statements checked at finite working points get the loose
//! bounds that finite-parameter corrections demand.
//!
//! Two gates (`acceptance_05_*` and `acceptance_06_*`) assert asymptotic
//! limit values at working points that are not deep enough in the limit for
//! the stated bounds to hold.  They fail today — on purpose.  Their failure
//! messages carry measured convergence tables showing the simulator
//! approaching the limit values monotonically as the two-photon detuning
//! grows, which is the evidence that the gap is in the working point, not in
//! the code.

use std::f64::consts::{FRAC_PI_2, PI};

use cavity_eit::closedform::{
    decoherence_spectrum_dc, driven_probe_limit_spectrum_theta0, lower_peak_frequency,
    rotation_peak_values, squeezing_exchange_frequency, upper_peak_frequency,
    vacuum_probe_limit_spectrum, ClosedFormInput,
};
use cavity_eit::doubled::{collective_drift, collective_jacobian};
use cavity_eit::fluctuations::LinearModel;
use cavity_eit::order::Mat12;
use cavity_eit::{FluctVar, Mode, ModelParams, NoiseVar, SpectrumEngine, C64, DIM};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Cavity linewidth shared by every benchmark configuration.
const GAMMA: f64 = 0.06;

/// Single-drive benchmark set at the given two-photon detuning.
fn single_drive(delta: f64) -> ModelParams {
    ModelParams {
        detuning: delta,
        ..ModelParams::benchmark()
    }
}

/// Benchmark set with both modes driven at equal Rabi frequency.
fn both_driven(delta: f64) -> ModelParams {
    ModelParams {
        alpha2: C64::new(-200.0, 0.0),
        detuning: delta,
        ..ModelParams::benchmark()
    }
}

/// 1. With the atoms decoupled and vacuum at both ports, every quadrature
///    spectrum is exactly flat at the vacuum level.
#[test]
fn acceptance_01_vacuum_normalization() {
    let p = ModelParams {
        coupling1: 0.0,
        coupling2: 0.0,
        squeeze_r: 0.0,
        ..ModelParams::benchmark()
    };
    let engine = SpectrumEngine::new(&p).unwrap();
    // With the cavity decoupled the driven atoms keep an undamped dark
    // direction, so the stationary spectrum is undefined exactly at zero
    // frequency; the engine must refuse rather than invent a number.
    assert!(engine.value(Mode::Probe, 0.0, 0.0).is_err());
    for k in 1..=200 {
        let omega = 100.0 * GAMMA * k as f64 / 200.0;
        for mode in [Mode::Pump, Mode::Probe] {
            for theta in [0.0, 0.7, FRAC_PI_2] {
                let s = engine.value(mode, theta, omega).unwrap();
                assert!(
                    (s - 1.0).abs() <= 1e-12,
                    "vacuum spectrum deviates at omega = {omega}: {s:.15}"
                );
            }
        }
    }
}

/// 2. With the atoms decoupled, the squeezed probe input leaves through the
///    all-pass cavity with its noise level intact at every frequency.
#[test]
fn acceptance_02_empty_cavity_squeezing_passthrough() {
    let p = ModelParams {
        coupling1: 0.0,
        coupling2: 0.0,
        ..ModelParams::benchmark()
    };
    let engine = SpectrumEngine::new(&p).unwrap();
    let expected = (-4.0_f64).exp();
    let mut omegas: Vec<f64> = (1..=200)
        .map(|k| 100.0 * GAMMA * k as f64 / 200.0)
        .collect();
    omegas.extend([20.0, 100.0]);
    for omega in omegas {
        let s = engine.value(Mode::Probe, 0.0, omega).unwrap();
        assert!(
            (s - expected).abs() <= 1e-10,
            "pass-through noise off at omega = {omega}: {s:.15} vs {expected:.15}"
        );
    }
}

/// 3. Vacuum inputs stay at the vacuum level at zero frequency, with or
///    without ground-state dephasing, matching the closed-form value.
#[test]
fn acceptance_03_coherent_preservation_at_dc() {
    for dephasing in [0.0, 1e-4] {
        for delta in [0.0, 2.0] {
            let p = ModelParams {
                squeeze_r: 0.0,
                dephasing,
                ..single_drive(delta)
            };
            let engine = SpectrumEngine::new(&p).unwrap();
            let s = engine.value(Mode::Probe, 0.0, 0.0).unwrap();
            assert!(
                (s - 1.0).abs() <= 1e-3,
                "dc vacuum level off at dephasing {dephasing}, delta {delta}: {s:.10}"
            );
            let input = ClosedFormInput::from_params(&p).unwrap();
            let formula = decoherence_spectrum_dc(&input, 0.0).unwrap();
            assert!(
                (s - formula).abs() <= 1e-3,
                "dc value disagrees with the closed form: {s:.10} vs {formula:.10}"
            );
        }
    }
}

/// 4. The upper normal-mode noise peak sits at the closed-form frequency
///    for three detunings.  Each search window brackets the upper branch
///    only — its partner peak at half-splitting minus detuning lies below.
#[test]
fn acceptance_04_upper_normal_mode_peak() {
    let cases = [
        (2.0, 6.196152422706632, (5.3, 9.9)),
        (4.0, 7.477225575051661, (5.2, 12.0)),
        (8.0, 10.48074069840786, (7.5, 16.0)),
    ];
    for (delta, frozen, window) in cases {
        let p = single_drive(delta);
        let input = ClosedFormInput::from_params(&p).unwrap();
        let formula = upper_peak_frequency(&input);
        assert!(
            (formula - frozen).abs() <= 1e-9 * frozen,
            "closed-form upper peak drifted at delta {delta}: {formula:.12} vs {frozen:.12}"
        );
        let engine = SpectrumEngine::new(&p).unwrap();
        let peak = engine.find_peak(Mode::Probe, 0.0, window, 240).unwrap();
        let rel = (peak.omega - formula).abs() / formula;
        assert!(
            rel <= 0.10,
            "numeric upper peak at delta {delta}: {:.5} vs {formula:.5} (rel {:.3})",
            peak.omega,
            rel
        );
    }
}

/// 5. Deep in the two-photon-detuned regime the probe noise develops a low
///    frequency rotation peak: its frequency matches the closed form and the
///    antisqueezed level rises above 20.  The final clause asserts the
///    asymptotic value of the orthogonal quadrature at the same point and is
///    an open gap at this working point — see the failure message.
#[test]
fn acceptance_05_low_frequency_peak_and_rotation() {
    let p = single_drive(100.0);
    let engine = SpectrumEngine::new(&p).unwrap();
    let input = ClosedFormInput::from_params(&p).unwrap();
    let formula = lower_peak_frequency(&input).unwrap();
    assert!(
        (formula - 0.248193472920).abs() <= 1e-9,
        "closed-form lower peak drifted: {formula:.12}"
    );
    let peak = engine
        .find_peak(Mode::Probe, 0.0, (0.02, 1.0), 300)
        .unwrap();
    let rel = (peak.omega - formula).abs() / formula;
    assert!(
        rel <= 0.25,
        "lower peak frequency off: {:.5} vs {formula:.5} (rel {rel:.3})",
        peak.omega
    );
    assert!(
        peak.height > 20.0,
        "antisqueezed peak too low: {:.4}",
        peak.height
    );

    let orthogonal = engine.value(Mode::Probe, FRAC_PI_2, peak.omega).unwrap();
    assert!(
        orthogonal < 0.1,
        "open gap: the pi/2 quadrature at the rotation peak is {orthogonal:.4}, not \
         below 0.1.  The rotation sends the input squeezing e^(-2r) = 0.0183 to that \
         point only asymptotically in the two-photon detuning; measured minima of the \
         pi/2 curve are 2.458 (delta 60), 0.532 (100), 0.169 (150), 0.086 (200), \
         0.042 (300), 0.026 (500), approaching 0.0183 monotonically.  The bound 0.1 \
         first holds near delta = 200, so at the pinned working point delta = 100 the \
         literal bound is unattainable even though the physics converges as it should."
    );
}

/// 6. With both modes driven, the rotation peak should reach the limit
///    height cosh^2(r) and the two output ports should satisfy the
///    quadrature-exchange identity.  Both clauses assert asymptotic values
///    at delta = 40 and are open gaps there — see the failure message.
#[test]
fn acceptance_06_driven_rotation_peak_and_exchange() {
    let engine = SpectrumEngine::new(&both_driven(40.0)).unwrap();
    let peak = engine
        .find_peak(Mode::Probe, 0.0, (0.05, 3.0), 240)
        .unwrap();
    let limit = 2.0_f64.cosh().powi(2);
    let mut gaps: Vec<String> = Vec::new();

    let rel = (peak.height - limit).abs() / limit;
    if rel > 0.25 {
        gaps.push(format!(
            "peak height {:.4} vs limit cosh^2(2) = {limit:.4} (rel {rel:.3} > 0.25).  \
             Measured heights at the numeric lower peak: 5.856 (delta 40), 11.851 (100), \
             13.516 (200), 13.865 (300) — monotone toward the limit, which needs the \
             detuning-dominated regime the delta = 40 working point is only entering",
            peak.height
        ));
    }

    let mut worst = 0.0_f64;
    for k in 0..8 {
        let theta = PI * k as f64 / 8.0;
        let pump = engine.value(Mode::Pump, theta, peak.omega).unwrap();
        let probe = engine
            .value(Mode::Probe, theta + FRAC_PI_2, peak.omega)
            .unwrap();
        worst = worst.max((pump - probe).abs() / probe.abs());
    }
    if worst > 0.15 {
        gaps.push(format!(
            "port-exchange identity off by {:.3} relative (> 0.15) over the theta grid.  \
             Measured worst mismatch: 0.761 (delta 40), 0.281 (100), 0.092 (200), \
             0.049 (300) — the identity emerges in the same asymptotic regime as the \
             peak height",
            worst
        ));
    }

    assert!(
        gaps.is_empty(),
        "open gaps at the delta = 40 working point:\n  - {}",
        gaps.join("\n  - ")
    );
}

/// 7. The undriven pump port picks up the injected probe squeezing at the
///    exchange frequency, and the low-frequency pump spectrum is insensitive
///    to the two-photon detuning.
#[test]
fn acceptance_07_squeezing_transfer_and_delta_independence() {
    let engines: Vec<SpectrumEngine> = [0.0, 2.0, 5.0]
        .iter()
        .map(|&d| SpectrumEngine::new(&both_driven(d)).unwrap())
        .collect();
    let input = ClosedFormInput::from_params(&both_driven(0.0)).unwrap();
    let omega_sq = squeezing_exchange_frequency(&input).unwrap();
    assert!(
        (omega_sq - 0.008164965809).abs() <= 1e-9,
        "exchange frequency drifted: {omega_sq:.12}"
    );
    let min = (0..16)
        .map(|k| {
            let theta = PI * k as f64 / 16.0;
            engines[0].value(Mode::Pump, theta, omega_sq).unwrap()
        })
        .fold(f64::INFINITY, f64::min);
    assert!(
        min < 0.9,
        "pump port shows no transferred squeezing: min {min:.4}"
    );

    for k in 1..=40 {
        let omega = GAMMA / 4.0 * k as f64 / 41.0;
        let vals: Vec<f64> = engines
            .iter()
            .map(|e| e.value(Mode::Pump, 0.0, omega).unwrap())
            .collect();
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!(
            (hi - lo) / lo <= 0.05,
            "pump curves split with detuning at omega = {omega}: {vals:?}"
        );
    }
}

/// 8. Modest ground-state dephasing destroys the squeezing transfer: the
///    pump output never drops meaningfully below vacuum.
#[test]
fn acceptance_08_decoherence_destroys_transfer() {
    let p = ModelParams {
        dephasing: 5e-4,
        ..both_driven(0.0)
    };
    let engine = SpectrumEngine::new(&p).unwrap();
    for j in 0..16 {
        let theta = PI * j as f64 / 16.0;
        for k in 1..=60 {
            let omega = GAMMA * k as f64 / 61.0;
            let s = engine.value(Mode::Pump, theta, omega).unwrap();
            assert!(
                s >= 0.98,
                "pump dips below 0.98 at theta = {theta:.3}, omega = {omega:.4}: {s:.5}"
            );
        }
    }
}

/// 9. Under ground-state dephasing the squeezed probe output degrades
///    monotonically with the two-photon detuning at every low frequency.
#[test]
fn acceptance_09_delta_sensitivity_under_decoherence() {
    let engines: Vec<SpectrumEngine> = [0.0, 2.0, 5.0]
        .iter()
        .map(|&d| {
            SpectrumEngine::new(&ModelParams {
                dephasing: 1e-4,
                ..single_drive(d)
            })
            .unwrap()
        })
        .collect();
    for k in 1..=50 {
        let omega = GAMMA * k as f64 / 51.0;
        let v: Vec<f64> = engines
            .iter()
            .map(|e| e.value(Mode::Probe, 0.0, omega).unwrap())
            .collect();
        assert!(
            v[1] > v[0] && v[2] > v[1],
            "noise not increasing in delta at omega = {omega}: {v:?}"
        );
    }
}

/// 10. Driving both modes makes ground-state dephasing destabilizing: the
///     working point is stable at dephasing 1/400 and the largest drift
///     eigenvalue crosses into the right half plane near 1/210.
#[test]
fn acceptance_10_instability_threshold() {
    let max_real = |dephasing: f64| -> f64 {
        let p = ModelParams {
            dephasing,
            ..both_driven(0.0)
        };
        let lm = LinearModel::from_params(&p).unwrap();
        lm.stability().unwrap().max_real
    };
    let (mut lo, mut hi) = (1.0 / 400.0, 1.0 / 100.0);
    assert!(max_real(lo) < 0.0, "not stable at dephasing 1/400");
    assert!(max_real(hi) > 0.0, "not unstable at dephasing 1/100");
    for _ in 0..48 {
        let mid = 0.5 * (lo + hi);
        if max_real(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let crossing = 0.5 * (lo + hi);
    assert!(
        (1.0 / 420.0..=1.0 / 105.0).contains(&crossing),
        "threshold {crossing:.6e} (1/{:.1}) outside a factor two of 1/210",
        1.0 / crossing
    );
}

/// 11. The closed-form package is internally consistent: the driven limit
///     spectrum reproduces the rotation values at the lower peak, the two
///     ports exchange quadratures, and every formula returns exactly the
///     vacuum level when the input squeezing is switched off.
#[test]
fn acceptance_11_closed_form_identity_suite() {
    for delta in [50.0, 100.0, 300.0, 600.0, 800.0] {
        let input = ClosedFormInput::from_params(&both_driven(delta)).unwrap();
        let omega_lower = lower_peak_frequency(&input).unwrap();

        let at_peak = driven_probe_limit_spectrum_theta0(&input, omega_lower);
        let (rot_probe, _) = rotation_peak_values(&input, 0.0).unwrap();
        assert!(
            (at_peak - rot_probe).abs() <= 1e-10 * rot_probe,
            "limit spectrum vs rotation value at delta {delta}: {at_peak:.12} vs {rot_probe:.12}"
        );

        for k in 0..8 {
            let theta = PI * k as f64 / 8.0;
            let (_, pump) = rotation_peak_values(&input, theta).unwrap();
            let (probe_rot, _) = rotation_peak_values(&input, theta + FRAC_PI_2).unwrap();
            assert!(
                (pump - probe_rot).abs() <= 1e-12 * probe_rot.abs().max(1.0),
                "port exchange broken at delta {delta}, theta {theta}"
            );
        }

        let quiet = ClosedFormInput {
            squeeze_r: 0.0,
            ..input
        };
        for omega in [0.01, 0.1, 0.3, 1.0, 3.0] {
            for theta in [0.0, 0.7, FRAC_PI_2] {
                let v = vacuum_probe_limit_spectrum(&quiet, theta, omega);
                assert!(
                    (v - 1.0).abs() <= 1e-12,
                    "vacuum fixed point broken: {v:.15}"
                );
            }
            let v = driven_probe_limit_spectrum_theta0(&quiet, omega);
            assert!(
                (v - 1.0).abs() <= 1e-12,
                "driven fixed point broken: {v:.15}"
            );
        }
        let (p0, p1) = rotation_peak_values(&quiet, 0.4).unwrap();
        assert!((p0 - 1.0).abs() <= 1e-12 && (p1 - 1.0).abs() <= 1e-12);
    }

    for delta in [0.0, 2.0] {
        let p = ModelParams {
            squeeze_r: 0.0,
            dephasing: 1e-4,
            ..single_drive(delta)
        };
        let input = ClosedFormInput::from_params(&p).unwrap();
        for theta in [0.0, FRAC_PI_2] {
            let v = decoherence_spectrum_dc(&input, theta).unwrap();
            assert!(
                (v - 1.0).abs() <= 1e-12,
                "dephasing dc fixed point broken: {v:.15}"
            );
        }
    }
}

/// 12. Numerical hygiene: the hand-assembled Jacobian matches central
///     differences of the drift over random parameter draws, the drift and
///     correlation matrices have the structural symmetries the doubled
///     ordering promises, and the spectra are real, nonnegative, and respect
///     the uncertainty product.
#[test]
fn acceptance_12_numerical_hygiene() {
    // Jacobian against central differences, 20 seeded draws around the
    // benchmark set.  The drift is quadratic, so the comparison is exact up
    // to rounding; the bound is relative to the largest Jacobian entry.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for _ in 0..20 {
        let jitter = |rng: &mut ChaCha8Rng| 0.8 + 0.4 * rng.gen::<f64>();
        let g = -0.005 * jitter(&mut rng);
        let p = ModelParams {
            atom_decay1: jitter(&mut rng),
            atom_decay2: jitter(&mut rng),
            dephasing: 3e-3 * rng.gen::<f64>(),
            cavity_decay1: GAMMA * jitter(&mut rng),
            cavity_decay2: GAMMA * jitter(&mut rng),
            coupling1: g,
            coupling2: g,
            detuning: 3.0 * rng.gen::<f64>(),
            alpha1: C64::new(-200.0 * jitter(&mut rng), 20.0 * rng.gen::<f64>()),
            alpha2: C64::new(-150.0 * rng.gen::<f64>(), 15.0 * rng.gen::<f64>()),
            ..ModelParams::benchmark()
        };
        let mut x = [C64::new(0.0, 0.0); DIM];
        for (k, slot) in x.iter_mut().enumerate() {
            let scale = if matches!(k, 0 | 1 | 7 | 8) {
                300.0
            } else {
                0.7
            };
            *slot = C64::new(
                scale * (2.0 * rng.gen::<f64>() - 1.0),
                scale * (2.0 * rng.gen::<f64>() - 1.0),
            );
        }
        let j = collective_jacobian(&p, &x);
        let scale = j.iter().map(|e| e.norm()).fold(0.0, f64::max);
        let d1 = C64::new(3.0, -1.0);
        let d2 = C64::new(0.5, 2.0);
        let mut worst = 0.0_f64;
        for c in 0..DIM {
            let h = 1e-3 * (1.0 + x[c].norm());
            for step in [C64::new(h, 0.0), C64::new(0.0, h)] {
                let mut xp = x;
                let mut xm = x;
                xp[c] += step;
                xm[c] -= step;
                let fp = collective_drift(&p, &xp, d1, d2);
                let fm = collective_drift(&p, &xm, d1, d2);
                for r in 0..DIM {
                    let fd = (fp[r] - fm[r]) / (2.0 * step);
                    worst = worst.max((fd - j[(r, c)]).norm());
                }
            }
        }
        assert!(
            worst <= 1e-6 * scale,
            "finite differences disagree with the Jacobian: {worst:.3e} vs scale {scale:.3e}"
        );
    }

    // Structural symmetries and spectrum sanity on two working points.
    let engines = [
        SpectrumEngine::new(&single_drive(100.0)).unwrap(),
        SpectrumEngine::new(&ModelParams {
            dephasing: 5e-4,
            ..both_driven(0.0)
        })
        .unwrap(),
    ];
    for engine in &engines {
        let a: &Mat12 = &engine.model().a;
        for r in FluctVar::ALL {
            for c in FluctVar::ALL {
                let direct = a[(r.idx(), c.idx())];
                let mirrored = a[(r.adjoint().idx(), c.adjoint().idx())].conj();
                assert!(
                    (direct - mirrored).norm() <= 1e-12 * direct.norm().max(1.0),
                    "drift conjugate symmetry broken at ({}, {})",
                    r.label(),
                    c.label()
                );
            }
        }
        // The correlation table is a second-moment matrix in a basis that
        // is not self-adjoint, so its Hermiticity is the permuted one: the
        // correlation of a channel pair and of its adjoint pair are complex
        // conjugates.
        let corr = engine.correlations();
        let scale = corr.iter().map(|e| e.norm()).fold(1.0, f64::max);
        for r in NoiseVar::ALL {
            for c in NoiseVar::ALL {
                let direct = corr[(r.idx(), c.idx())];
                let mirrored = corr[(c.adjoint().idx(), r.adjoint().idx())].conj();
                assert!(
                    (direct - mirrored).norm() <= 1e-12 * scale,
                    "correlation table breaks adjoint Hermiticity at ({}, {})",
                    r.idx(),
                    c.idx()
                );
            }
        }

        for omega in [0.05, 0.2573, 0.5, 2.0, 6.0] {
            for mode in [Mode::Pump, Mode::Probe] {
                for theta in [0.0, 0.6] {
                    let s = engine.value(mode, theta, omega).unwrap();
                    let s_orth = engine.value(mode, theta + FRAC_PI_2, omega).unwrap();
                    assert!(s >= 0.0 && s.is_finite(), "spectrum not a noise level: {s}");
                    assert!(
                        s * s_orth >= 1.0 - 1e-8,
                        "uncertainty product below one at omega {omega}: {}",
                        s * s_orth
                    );
                }
            }
        }
    }
}
