//! Averages over oscillator states: ladder moments ⟨a⟩, ⟨a²⟩, ⟨a⁺a⟩, the
//! first and second moments of x and p, the uncertainty product and the mean
//! energy. Each is available from the closed forms in χ and by brute-force
//! matrix expectation.

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::coherent::{evolve_label, CoherentLabel};
use crate::error::{Error, Result};
use crate::fock::{
    expectation, make_hamiltonian, make_ladder, make_xp, Operator, StateVector, NORM_TOLERANCE,
};
use crate::params::OscillatorParams;

/// Negative variances down to this fraction of the natural variance scale are
/// treated as rounding and clipped to zero.
pub const VARIANCE_CLIP: f64 = 1e-12;

/// One time sample of every tracked average.
///
/// ⟨a⁺⟩ and ⟨a⁺²⟩ are the conjugates of `a_avg` and `a2_avg`; see
/// [`ObservableRecord::a_dagger_avg`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableRecord {
    pub time: f64,
    pub mean_x: f64,
    pub mean_p: f64,
    pub mean_x2: f64,
    pub mean_p2: f64,
    pub n_avg: f64,
    pub a_avg: Complex64,
    pub a2_avg: Complex64,
    pub uncertainty: f64,
    pub energy: f64,
}

impl ObservableRecord {
    /// Flat column names, complex fields split into `_re`/`_im`.
    pub const COLUMNS: [&'static str; 12] = [
        "time",
        "mean_x",
        "mean_p",
        "mean_x2",
        "mean_p2",
        "n_avg",
        "a_avg_re",
        "a_avg_im",
        "a2_avg_re",
        "a2_avg_im",
        "uncertainty",
        "energy",
    ];

    pub fn values(&self) -> [f64; 12] {
        [
            self.time,
            self.mean_x,
            self.mean_p,
            self.mean_x2,
            self.mean_p2,
            self.n_avg,
            self.a_avg.re,
            self.a_avg.im,
            self.a2_avg.re,
            self.a2_avg.im,
            self.uncertainty,
            self.energy,
        ]
    }

    /// Columnwise |self − other|.
    pub fn abs_diff(&self, other: &ObservableRecord) -> [f64; 12] {
        let (a, b) = (self.values(), other.values());
        std::array::from_fn(|i| (a[i] - b[i]).abs())
    }

    /// Largest columnwise difference, ignoring the time column.
    pub fn max_abs_diff(&self, other: &ObservableRecord) -> f64 {
        self.abs_diff(other).into_iter().skip(1).fold(0.0, f64::max)
    }

    pub fn a_dagger_avg(&self) -> Complex64 {
        self.a_avg.conj()
    }

    pub fn a_dagger2_avg(&self) -> Complex64 {
        self.a2_avg.conj()
    }

    pub fn variance_x(&self) -> f64 {
        self.mean_x2 - self.mean_x * self.mean_x
    }

    pub fn variance_p(&self) -> f64 {
        self.mean_p2 - self.mean_p * self.mean_p
    }
}

impl Serialize for ObservableRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ObservableRecord", Self::COLUMNS.len())?;
        for (name, value) in Self::COLUMNS.iter().zip(self.values()) {
            s.serialize_field(name, &value)?;
        }
        s.end()
    }
}

/// Closed-form averages in the dynamical coherent state with label χ at time t.
pub fn averages_closedform(
    label: CoherentLabel,
    t: f64,
    params: &OscillatorParams,
) -> ObservableRecord {
    let chi_t = evolve_label(label, t, params).chi();
    let n_avg = label.mean_occupation();
    let chi2 = chi_t * chi_t;
    // χ*² + χ² = 2 Re χ², i(χ* − χ) = 2 Im χ
    let sum_sq = 2.0 * chi2.re;
    let x_unit = params.hbar() / (2.0 * params.mass() * params.omega());
    let p_unit = params.mass() * params.hbar() * params.omega() / 2.0;
    ObservableRecord {
        time: t,
        mean_x: params.x_scale() * 2.0 * chi_t.re,
        mean_p: params.p_scale() * 2.0 * chi_t.im,
        mean_x2: x_unit * (sum_sq + 2.0 * n_avg + 1.0),
        mean_p2: -p_unit * (sum_sq - 2.0 * n_avg - 1.0),
        n_avg,
        a_avg: chi_t,
        a2_avg: chi2,
        uncertainty: params.hbar() / 2.0,
        energy: params.hbar() * params.omega() * (n_avg + 0.5),
    }
}

/// I_n = ħ(n + 1/2), the uncertainty product of the n-th level.
pub fn uncertainty_fock(n: usize, params: &OscillatorParams) -> f64 {
    params.hbar() * (n as f64 + 0.5)
}

/// Weight of a state in the two highest levels, where X² and P² built at the
/// same cutoff are no longer exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationMargin {
    pub edge_weight: f64,
    /// Highest level with nonzero amplitude.
    pub last_occupied: usize,
    pub n_max: usize,
}

impl TruncationMargin {
    pub fn of(state: &StateVector) -> Self {
        let n_max = state.n_max();
        let last_occupied = state
            .coeffs()
            .iter()
            .rposition(|c| c.norm_sqr() > 0.0)
            .unwrap_or(0);
        let edge_weight = state
            .coeffs()
            .iter()
            .skip(n_max.saturating_sub(1))
            .map(|c| c.norm_sqr())
            .sum();
        Self {
            edge_weight,
            last_occupied,
            n_max,
        }
    }

    /// Support ends at least two levels below the cutoff.
    pub fn is_exact(&self) -> bool {
        self.last_occupied + 2 <= self.n_max
    }

    pub fn is_adequate(&self, tolerance: f64) -> bool {
        self.is_exact() || self.edge_weight <= tolerance
    }
}

/// Operator matrices at one cutoff, built once and reused for many states.
#[derive(Debug, Clone)]
pub struct BruteForce {
    params: OscillatorParams,
    a: Operator,
    a2: Operator,
    number: Operator,
    x: Operator,
    x2: Operator,
    p: Operator,
    p2: Operator,
    hamiltonian: Operator,
    norm_tolerance: f64,
}

impl BruteForce {
    pub fn new(params: &OscillatorParams, n_max: usize) -> Self {
        let (a, a_dagger) = make_ladder(n_max);
        let (x, p) = make_xp(params, n_max);
        let dot = |l: &Operator, r: &Operator| l.dot(r).expect("same cutoff");
        Self {
            params: *params,
            a2: dot(&a, &a),
            number: dot(&a_dagger, &a),
            x2: dot(&x, &x),
            p2: dot(&p, &p),
            hamiltonian: make_hamiltonian(params, n_max),
            a,
            x,
            p,
            norm_tolerance: NORM_TOLERANCE,
        }
    }

    pub fn with_norm_tolerance(mut self, tolerance: f64) -> Self {
        self.norm_tolerance = tolerance;
        self
    }

    pub fn n_max(&self) -> usize {
        self.a.n_max()
    }

    pub fn params(&self) -> &OscillatorParams {
        &self.params
    }

    pub fn evaluate(&self, state: &StateVector) -> Result<ObservableRecord> {
        state.check_normalized(self.norm_tolerance)?;
        let ex = |op: &Operator| expectation(op, state);
        let mean_x = ex(&self.x)?.re;
        let mean_p = ex(&self.p)?.re;
        let mean_x2 = ex(&self.x2)?.re;
        let mean_p2 = ex(&self.p2)?.re;
        let var_x = clip_variance(
            "x",
            mean_x2 - mean_x * mean_x,
            self.params.x_scale().powi(2),
        )?;
        let var_p = clip_variance(
            "p",
            mean_p2 - mean_p * mean_p,
            self.params.p_scale().powi(2),
        )?;
        Ok(ObservableRecord {
            time: state.time(),
            mean_x,
            mean_p,
            mean_x2,
            mean_p2,
            n_avg: ex(&self.number)?.re,
            a_avg: ex(&self.a)?,
            a2_avg: ex(&self.a2)?,
            uncertainty: (var_x * var_p).sqrt(),
            energy: ex(&self.hamiltonian)?.re,
        })
    }

    /// Like [`BruteForce::evaluate`], also reporting how much weight sits where
    /// the second-moment matrices are truncated.
    pub fn evaluate_with_margin(
        &self,
        state: &StateVector,
    ) -> Result<(ObservableRecord, TruncationMargin)> {
        Ok((self.evaluate(state)?, TruncationMargin::of(state)))
    }
}

fn clip_variance(quantity: &'static str, value: f64, scale: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -VARIANCE_CLIP * scale {
        Ok(0.0)
    } else {
        Err(Error::NegativeVariance { quantity, value })
    }
}

/// Every average of `state` by matrix expectation at the state's own cutoff.
pub fn averages_bruteforce(
    state: &StateVector,
    params: &OscillatorParams,
) -> Result<ObservableRecord> {
    BruteForce::new(params, state.n_max()).evaluate(state)
}
