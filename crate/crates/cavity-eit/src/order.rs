//! Fixed orderings for the doubled fluctuation vector and the noise vector.
//!
//! The linearized dynamics treat an operator and its adjoint as independent
//! coordinates, so the state space is "doubled": twelve variables for two
//! cavity modes and the five collective atomic operators (the two inversion
//! combinations are self-adjoint and appear once).  Every matrix in the
//! fluctuation pipeline is written in these orderings, and the adjoint maps
//! below are what the conjugate-symmetry checks are phrased in.

/// Number of doubled fluctuation variables (= number of noise channels).
pub const DIM: usize = 12;

/// Dense complex matrix over the doubled space (drift, noise coupling,
/// correlation and transfer matrices all share this shape).
pub type Mat12 = nalgebra::SMatrix<num_complex::Complex64, DIM, DIM>;

/// Complex vector over the doubled space.
pub type Vec12 = nalgebra::SVector<num_complex::Complex64, DIM>;

/// The doubled fluctuation variables, in storage order.
///
/// `S10` stands for the collective lowering operator taking the excited level
/// to ground level 1, `S21` for the ground-state coherence, and `W1`, `W2`
/// for the two inversion combinations (excited population minus the
/// respective ground population).  `A1Dag`..`S12` are the adjoints of the
/// first five entries; `W1` and `W2` are their own adjoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(usize)]
pub enum FluctVar {
    A1 = 0,
    A2 = 1,
    S10 = 2,
    S20 = 3,
    S21 = 4,
    W1 = 5,
    W2 = 6,
    A1Dag = 7,
    A2Dag = 8,
    S01 = 9,
    S02 = 10,
    S12 = 11,
}

impl FluctVar {
    /// All variables in storage order.
    pub const ALL: [FluctVar; DIM] = [
        FluctVar::A1,
        FluctVar::A2,
        FluctVar::S10,
        FluctVar::S20,
        FluctVar::S21,
        FluctVar::W1,
        FluctVar::W2,
        FluctVar::A1Dag,
        FluctVar::A2Dag,
        FluctVar::S01,
        FluctVar::S02,
        FluctVar::S12,
    ];

    /// Row/column index of this variable.
    pub fn idx(self) -> usize {
        self as usize
    }

    /// The adjoint partner; an involution with `W1` and `W2` as fixed points.
    pub fn adjoint(self) -> FluctVar {
        use FluctVar::*;
        match self {
            A1 => A1Dag,
            A2 => A2Dag,
            S10 => S01,
            S20 => S02,
            S21 => S12,
            W1 => W1,
            W2 => W2,
            A1Dag => A1,
            A2Dag => A2,
            S01 => S10,
            S02 => S20,
            S12 => S21,
        }
    }

    /// Short text label, used in diagnostics.
    pub fn label(self) -> &'static str {
        use FluctVar::*;
        match self {
            A1 => "a1",
            A2 => "a2",
            S10 => "S10",
            S20 => "S20",
            S21 => "S21",
            W1 => "W1",
            W2 => "W2",
            A1Dag => "a1+",
            A2Dag => "a2+",
            S01 => "S01",
            S02 => "S02",
            S12 => "S12",
        }
    }
}

/// The noise channels driving the linearized system, in storage order:
/// the four cavity input quadratures first, then the eight collective atomic
/// Langevin forces (one per atomic variable of [`FluctVar`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(usize)]
pub enum NoiseVar {
    A1In = 0,
    A2In = 1,
    A1InDag = 2,
    A2InDag = 3,
    F10 = 4,
    F20 = 5,
    F21 = 6,
    FW1 = 7,
    FW2 = 8,
    F01 = 9,
    F02 = 10,
    F12 = 11,
}

impl NoiseVar {
    /// All channels in storage order.
    pub const ALL: [NoiseVar; DIM] = [
        NoiseVar::A1In,
        NoiseVar::A2In,
        NoiseVar::A1InDag,
        NoiseVar::A2InDag,
        NoiseVar::F10,
        NoiseVar::F20,
        NoiseVar::F21,
        NoiseVar::FW1,
        NoiseVar::FW2,
        NoiseVar::F01,
        NoiseVar::F02,
        NoiseVar::F12,
    ];

    /// Column index of this channel.
    pub fn idx(self) -> usize {
        self as usize
    }

    /// The adjoint channel; `FW1` and `FW2` are self-adjoint.
    pub fn adjoint(self) -> NoiseVar {
        use NoiseVar::*;
        match self {
            A1In => A1InDag,
            A2In => A2InDag,
            A1InDag => A1In,
            A2InDag => A2In,
            F10 => F01,
            F20 => F02,
            F21 => F12,
            FW1 => FW1,
            FW2 => FW2,
            F01 => F10,
            F02 => F20,
            F12 => F21,
        }
    }

    /// The fluctuation row this channel feeds directly (each force enters
    /// exactly one equation).
    pub fn target(self) -> FluctVar {
        use NoiseVar::*;
        match self {
            A1In => FluctVar::A1,
            A2In => FluctVar::A2,
            A1InDag => FluctVar::A1Dag,
            A2InDag => FluctVar::A2Dag,
            F10 => FluctVar::S10,
            F20 => FluctVar::S20,
            F21 => FluctVar::S21,
            FW1 => FluctVar::W1,
            FW2 => FluctVar::W2,
            F01 => FluctVar::S01,
            F02 => FluctVar::S02,
            F12 => FluctVar::S12,
        }
    }
}
