//! Numerical laboratory for the quantum harmonic oscillator in dynamical
//! coherent states.
//!
//! States live in a truncated Fock basis |0⟩..|n_max⟩ and operators are dense
//! complex matrices. Every closed-form average of a coherent state (ladder
//! moments, mean motion, second moments, uncertainty product, mean energy) can
//! be recomputed by brute-force matrix expectation, and the position-space
//! packet is available both as a truncated eigenfunction series and in closed
//! form.
//!
//! ```
//! use qho_coherent::prelude::*;
//!
//! let params = OscillatorParams::natural();
//! let chi = CoherentLabel::new(1.0, 0.5);
//! let n_max = auto_n_max(chi, AUTO_TAIL_TOLERANCE).unwrap();
//! let state = dynamical_coherent_state(chi, 0.3, &params, n_max);
//! let numeric = averages_bruteforce(&state, &params).unwrap();
//! let exact = averages_closedform(chi, 0.3, &params);
//! assert!(numeric.max_abs_diff(&exact) < 1e-9);
//! ```

pub mod cli;
pub mod coherent;
pub mod error;
pub mod fock;
pub mod observables;
pub mod params;
pub mod report;
pub mod symmetry;
pub mod verify;
pub mod wavefunction;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::coherent::{
        annihilation_residual, auto_n_max, coherent_coefficients, dynamical_coherent_state,
        evolve_label, occupation_probability, truncation_tail, CoherentLabel, AUTO_TAIL_TOLERANCE,
    };
    pub use crate::error::{Error, Result};
    pub use crate::fock::{
        expectation, fock_state, make_hamiltonian, make_ladder, make_number, make_xp, Operator,
        StateVector,
    };
    pub use crate::observables::{
        averages_bruteforce, averages_closedform, uncertainty_fock, BruteForce, ObservableRecord,
    };
    pub use crate::params::OscillatorParams;
    pub use crate::symmetry::{
        ehrenfest_residual, phase_transform_ladder, propagate_fock, rotate_xp,
        transform_state_phase, PhaseAngle, Trajectory,
    };
    pub use crate::wavefunction::{
        eigenfunction, generating_sum_check, hermite, psi_closed, psi_series, quadrature_norm,
        ClosedForm, SpatialGrid, WaveSample,
    };
}
