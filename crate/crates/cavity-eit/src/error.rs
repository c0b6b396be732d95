//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong between parameter entry and a finished
/// spectrum table.
#[derive(Debug, Error)]
pub enum Error {
    /// A decay rate or dephasing rate was negative (or not finite).
    #[error("rate `{name}` must be a finite non-negative number, got {value}")]
    NegativeRate { name: &'static str, value: f64 },

    /// The model needs at least one atom.
    #[error("atom count must be at least 1")]
    ZeroAtoms,

    /// Reduced quantities such as the cooperativity assume a single coupling
    /// constant `g`; they are undefined when the two modes couple differently.
    #[error("derived quantities need g1 == g2, got g1 = {g1}, g2 = {g2}")]
    AsymmetricCoupling { g1: f64, g2: f64 },

    /// Both target amplitudes vanish, so no ground-state superposition is
    /// singled out and no stationary seed can be built.
    #[error(
        "both target amplitudes are zero; the undriven ground manifold has no preferred state"
    )]
    ZeroDrive,

    /// The Newton iteration for the semiclassical steady state stalled.
    #[error("steady-state search did not converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { iterations: usize, residual: f64 },

    /// The (regularized) Newton step could not be computed.
    #[error("singular Jacobian in steady-state search")]
    SingularJacobian,

    /// The linearized fluctuation dynamics have a growing mode, so no
    /// stationary noise spectrum exists.
    #[error("fluctuations are unstable: max Re(eigenvalue) = {max_real:.6e}")]
    Unstable { max_real: f64 },

    /// The requested frequency sits on (within numerical resolution of) a
    /// marginal mode of the drift matrix, where the response diverges.
    #[error("spectrum undefined at omega = {omega}: frequency coincides with a marginal mode")]
    NearSingular { omega: f64 },

    /// A peak search found no interior extremum.
    #[error("no interior extremum of the spectrum in [{lo}, {hi}]")]
    NoPeak { lo: f64, hi: f64 },

    /// A closed-form expression was evaluated outside its domain.
    #[error("outside the domain of the closed form: {what}")]
    Domain { what: String },

    /// A dense linear-algebra routine failed (singular factorization,
    /// non-converged eigensolve, ...).
    #[error("linear algebra failure: {0}")]
    Linalg(String),
}
