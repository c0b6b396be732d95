//! Stationary quadrature-noise spectra of a two-mode cavity coupled to an
//! ensemble of three-level lambda atoms.
//!
//! The crate models `N` atoms with one excited and two ground levels placed
//! in a cavity supporting two modes, each mode driving one arm of the
//! lambda.  Around the semiclassical working point — a coherent-population-
//! trapping state dressed by ground-state decoherence — the quantum
//! fluctuations obey linear Langevin equations whose noise strengths follow
//! from the generalized Einstein relations.  Solving those equations in the
//! frequency domain and applying the input-output relations yields the
//! spectra of the quadrature noise in the fields leaving the cavity: the
//! machinery needed to study how squeezing injected into one mode is
//! transmitted, exchanged between the modes, or degraded by decoherence.
//!
//! The high-level entry points are [`ModelParams`] for the model
//! definition, [`solve_steady_state`] for the working point, and
//! [`SpectrumEngine`] for the output spectra; [`closedform`] collects
//! closed-form limits used for cross-checking.

pub mod atom;
pub mod closedform;
pub mod diffusion;
pub mod doubled;
pub mod error;
pub mod fluctuations;
pub mod order;
pub mod params;
pub mod semiclassics;
pub mod spectra;

pub use error::Error;
pub use fluctuations::{LinearModel, StabilityReport};
pub use order::{FluctVar, NoiseVar, DIM};
pub use params::{DerivedQuantities, ModelParams};
pub use semiclassics::{
    dark_state_seed, mean_drift, required_drive, solve_steady_state, MeanDrift, MeanState,
    SteadyState,
};
pub use spectra::{find_peak, Mode, PeakReport, SpectrumEngine, SpectrumRow, SpectrumTable};

/// Convenience alias used throughout the crate.
pub type C64 = num_complex::Complex64;

// The guide's chapters double as doc-tests: every fenced Rust block in
// `book/src/` compiles and runs against the current API, so the rendered
// book cannot drift away from the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(readme, "../../../README.md");
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(model, "../../../book/src/model.md");
    chapter!(steady_state, "../../../book/src/steady-state.md");
    chapter!(fluctuations, "../../../book/src/fluctuations.md");
    chapter!(noise, "../../../book/src/noise.md");
    chapter!(spectra, "../../../book/src/spectra.md");
    chapter!(closed_forms, "../../../book/src/closed-forms.md");
    chapter!(cli, "../../../book/src/cli.md");
}
