//! Phase transformations, exact Fock-basis time evolution and the classical
//! equations of motion obeyed by the means.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coherent::{coherent_coefficients, unit_phase, CoherentLabel};
use crate::error::{Error, Result};
use crate::fock::{Operator, StateVector};
use crate::observables::{averages_closedform, BruteForce, ObservableRecord};
use crate::params::OscillatorParams;

/// Angle α of the transformation a → a·e^(iα).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseAngle(f64);

impl PhaseAngle {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidParams(format!(
                "phase angle {alpha} is not finite"
            )))
        }
    }

    pub fn radians(&self) -> f64 {
        self.0
    }

    /// α reduced to [0, 2π), for display.
    pub fn reduced(&self) -> f64 {
        self.0.rem_euclid(TAU)
    }
}

/// a' = a·e^(iα). The creation operator transforms as a'⁺ = (a')†.
pub fn phase_transform_ladder(a: &Operator, alpha: PhaseAngle) -> Operator {
    a.scale(unit_phase(alpha.radians()))
}

/// Applies the x–p rotation to a pair of (mean) coordinates:
/// x' = −(p/Mω) sin α + x cos α, p' = p cos α + Mωx sin α.
pub fn rotate_xp(
    mean_x: f64,
    mean_p: f64,
    alpha: PhaseAngle,
    params: &OscillatorParams,
) -> (f64, f64) {
    let m_omega = params.mass() * params.omega();
    let (s, c) = alpha.radians().sin_cos();
    (
        -mean_p / m_omega * s + mean_x * c,
        mean_p * c + m_omega * mean_x * s,
    )
}

/// Classical energy p²/2M + Mω²x²/2 of a phase-space point.
pub fn classical_energy(x: f64, p: f64, params: &OscillatorParams) -> f64 {
    p * p / (2.0 * params.mass()) + 0.5 * params.mass() * params.omega().powi(2) * x * x
}

/// State-space image of a → a·e^(iα): C_n → C_n·e^(−inα).
pub fn transform_state_phase(state: &StateVector, alpha: PhaseAngle) -> StateVector {
    let mut coeffs = state.coeffs().clone();
    for (n, c) in coeffs.iter_mut().enumerate() {
        *c *= unit_phase(-(n as f64) * alpha.radians());
    }
    StateVector::new(coeffs, state.time()).expect("non-empty")
}

/// Exact evolution by t: C_n → C_n·e^(−iε_n t/ħ). The result is stamped with
/// the input time plus t.
pub fn propagate_fock(state: &StateVector, t: f64, params: &OscillatorParams) -> StateVector {
    let omega_t = params.omega() * t;
    let mut coeffs = state.coeffs().clone();
    for (n, c) in coeffs.iter_mut().enumerate() {
        *c *= unit_phase(-omega_t * (n as f64 + 0.5));
    }
    StateVector::new(coeffs, state.time() + t).expect("non-empty")
}

/// x̄(t) = x̄₀ cos ωt + (p̄₀/Mω) sin ωt and the matching p̄(t).
pub fn mean_motion(mean_x0: f64, mean_p0: f64, t: f64, params: &OscillatorParams) -> (f64, f64) {
    let m_omega = params.mass() * params.omega();
    let (s, c) = (params.omega() * t).sin_cos();
    (
        mean_x0 * c + mean_p0 / m_omega * s,
        mean_p0 * c - m_omega * mean_x0 * s,
    )
}

/// Uniformly sampled time series of observable records.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    records: Vec<ObservableRecord>,
    dt: f64,
}

impl Trajectory {
    pub fn new(records: Vec<ObservableRecord>, dt: f64) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "trajectory step must be positive, got {dt}"
            )));
        }
        if let Some(first) = records.first() {
            let t0 = first.time;
            for (k, r) in records.iter().enumerate() {
                let expected = t0 + dt * k as f64;
                if (r.time - expected).abs() > 1e-9 * dt + 1e-12 * expected.abs() {
                    return Err(Error::NonUniformSpacing { dt, index: k });
                }
            }
        }
        Ok(Self { records, dt })
    }

    /// Closed-form averages at t_start + k·dt, k = 0..samples.
    pub fn closed_form(
        label: CoherentLabel,
        params: &OscillatorParams,
        t_start: f64,
        dt: f64,
        samples: usize,
    ) -> Result<Self> {
        let records = sample_times(t_start, dt, samples)
            .map(|t| averages_closedform(label, t, params))
            .collect();
        Self::new(records, dt)
    }

    /// Brute-force averages of an initial state (taken at t = 0) propagated
    /// exactly to each sample time.
    pub fn from_state(
        initial: &StateVector,
        params: &OscillatorParams,
        t_start: f64,
        dt: f64,
        samples: usize,
    ) -> Result<Self> {
        let evaluator = BruteForce::new(params, initial.n_max());
        let origin = initial.clone().with_time(0.0);
        let records = sample_times(t_start, dt, samples)
            .map(|t| evaluator.evaluate(&propagate_fock(&origin, t, params)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(records, dt)
    }

    /// Brute-force averages of the coherent state with label χ.
    pub fn coherent_bruteforce(
        label: CoherentLabel,
        params: &OscillatorParams,
        n_max: usize,
        t_start: f64,
        dt: f64,
        samples: usize,
    ) -> Result<Self> {
        Self::from_state(
            &coherent_coefficients(label, n_max),
            params,
            t_start,
            dt,
            samples,
        )
    }

    pub fn records(&self) -> &[ObservableRecord] {
        &self.records
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

fn sample_times(t_start: f64, dt: f64, samples: usize) -> impl Iterator<Item = f64> {
    (0..samples).map(move |k| t_start + dt * k as f64)
}

/// Worst finite-difference violations of the classical equations of motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EhrenfestResidual {
    /// max |D²x̄ + ω²x̄|
    pub second_x: f64,
    /// max |D²p̄ + ω²p̄|
    pub second_p: f64,
    /// max |Dx̄ − p̄/M|
    pub first_x: f64,
    /// max |Dp̄ + Mω²x̄|
    pub first_p: f64,
}

impl EhrenfestResidual {
    /// Worse of the two checks on x̄.
    pub fn x(&self) -> f64 {
        self.second_x.max(self.first_x)
    }

    pub fn p(&self) -> f64 {
        self.second_p.max(self.first_p)
    }
}

/// Centered-difference residuals of ẍ̄ + ω²x̄ = 0, p̈̄ + ω²p̄ = 0 and the
/// first-order pair ẋ̄ = p̄/M, ṗ̄ = −Mω²x̄, over interior samples.
pub fn ehrenfest_residual(
    traj: &Trajectory,
    params: &OscillatorParams,
) -> Result<EhrenfestResidual> {
    let records = traj.records();
    if records.len() < 3 {
        return Err(Error::TooFewRecords {
            required: 3,
            found: records.len(),
        });
    }
    let dt = traj.dt();
    let omega2 = params.omega().powi(2);
    let mass = params.mass();
    let mut out = EhrenfestResidual {
        second_x: 0.0,
        second_p: 0.0,
        first_x: 0.0,
        first_p: 0.0,
    };
    for w in records.windows(3) {
        let (prev, cur, next) = (&w[0], &w[1], &w[2]);
        let d2x = (next.mean_x - 2.0 * cur.mean_x + prev.mean_x) / (dt * dt);
        let d2p = (next.mean_p - 2.0 * cur.mean_p + prev.mean_p) / (dt * dt);
        let dx = (next.mean_x - prev.mean_x) / (2.0 * dt);
        let dp = (next.mean_p - prev.mean_p) / (2.0 * dt);
        out.second_x = out.second_x.max((d2x + omega2 * cur.mean_x).abs());
        out.second_p = out.second_p.max((d2p + omega2 * cur.mean_p).abs());
        out.first_x = out.first_x.max((dx - cur.mean_p / mass).abs());
        out.first_p = out.first_p.max((dp + mass * omega2 * cur.mean_x).abs());
    }
    Ok(out)
}

/// ⟨a⟩ of a state, the order parameter of the broken phase symmetry.
pub fn ladder_average(state: &StateVector) -> Complex64 {
    let c = state.coeffs();
    (1..c.len())
        .map(|n| c[n - 1].conj() * c[n] * (n as f64).sqrt())
        .sum()
}
