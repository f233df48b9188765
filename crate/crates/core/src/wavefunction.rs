//! Position representation of oscillator states.
//!
//! Eigenfunctions are produced by the three-term recurrence on the normalized
//! functions themselves, with the Gaussian folded into the seed, so they stay
//! finite for large n. The bare polynomial [`hermite`] overflows near n ≈ 150
//! at moderate x and is kept for identity checks only.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::coherent::{dynamical_coherent_state, evolve_label, CoherentLabel};
use crate::error::{Error, Result};
use crate::observables::averages_closedform;
use crate::params::OscillatorParams;

/// Half-width of the default grid, in oscillator lengths.
pub const DEFAULT_HALFWIDTH: f64 = 10.0;
pub const DEFAULT_GRID_POINTS: usize = 2001;

/// π^(−1/4).
const PI_POW_NEG_QUARTER: f64 = 0.751_125_544_464_942_5;

/// A complex amplitude at one position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSample {
    pub x: f64,
    pub value: Complex64,
}

impl WaveSample {
    /// Export column names.
    pub const COLUMNS: [&'static str; 4] = ["x", "re", "im", "abs2"];

    pub fn abs2(&self) -> f64 {
        self.value.norm_sqr()
    }

    pub fn values(&self) -> [f64; 4] {
        [self.x, self.value.re, self.value.im, self.abs2()]
    }
}

impl Serialize for WaveSample {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("WaveSample", 4)?;
        for (name, value) in Self::COLUMNS.iter().zip(self.values()) {
            s.serialize_field(name, &value)?;
        }
        s.end()
    }
}

/// Which closed expression to use for the coherent packet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// Gaussian with a complex center χ(t)·√(2ħ/Mω).
    ComplexCenter,
    /// Real Gaussian at x̄(t) with a plane-wave factor e^(ip̄x/ħ).
    MeanPhase,
}

/// Physicists' Hermite polynomial H_n(x), H_{n+1} = 2xH_n − 2nH_{n−1}.
pub fn hermite(n: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// φ_0(x)..φ_{n_max}(x) at one position.
pub fn eigenfunctions(n_max: usize, x: f64, params: &OscillatorParams) -> Vec<f64> {
    let length = params.length_scale();
    let xi = x / length;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(PI_POW_NEG_QUARTER / length.sqrt() * (-0.5 * xi * xi).exp());
    if n_max >= 1 {
        out.push(2f64.sqrt() * xi * out[0]);
    }
    for n in 1..n_max {
        let n_f = n as f64;
        let next =
            (2.0 / (n_f + 1.0)).sqrt() * xi * out[n] - (n_f / (n_f + 1.0)).sqrt() * out[n - 1];
        out.push(next);
    }
    out
}

/// φ_n(x) = (Mω/πħ)^(1/4) (2ⁿn!)^(−1/2) e^(−Mωx²/2ħ) H_n(x√(Mω/ħ)).
pub fn eigenfunction(n: usize, x: f64, params: &OscillatorParams) -> f64 {
    eigenfunctions(n, x, params)[n]
}

/// |Σ_{k≤k_max} t^k H_k(x)/k! − e^(2xt−t²)|.
pub fn generating_sum_check(x: f64, t: f64, k_max: usize) -> f64 {
    let mut sum = 1.0;
    let (mut h_prev, mut h_cur) = (0.0, 1.0);
    let mut factor = 1.0;
    for k in 1..=k_max {
        let h_next = 2.0 * x * h_cur - 2.0 * (k - 1) as f64 * h_prev;
        h_prev = h_cur;
        h_cur = h_next;
        factor *= t / k as f64;
        sum += factor * h_cur;
    }
    (sum - (2.0 * x * t - t * t).exp()).abs()
}

/// Coherent packet at x as the truncated expansion Σ C_n(χ, t) φ_n(x).
pub fn psi_series(
    label: CoherentLabel,
    x: f64,
    t: f64,
    params: &OscillatorParams,
    n_max: usize,
) -> WaveSample {
    let state = dynamical_coherent_state(label, t, params, n_max);
    WaveSample {
        x,
        value: series_value(state.coeffs().as_slice().expect("contiguous"), x, params),
    }
}

fn series_value(coeffs: &[Complex64], x: f64, params: &OscillatorParams) -> Complex64 {
    eigenfunctions(coeffs.len() - 1, x, params)
        .into_iter()
        .zip(coeffs)
        .map(|(phi, c)| c * phi)
        .sum()
}

/// [`psi_series`] over every point of a grid, sharing the coefficients.
pub fn series_on_grid(
    label: CoherentLabel,
    t: f64,
    params: &OscillatorParams,
    n_max: usize,
    grid: &SpatialGrid,
) -> Vec<WaveSample> {
    let state = dynamical_coherent_state(label, t, params, n_max);
    let coeffs = state.coeffs().as_slice().expect("contiguous");
    grid.points()
        .iter()
        .map(|&x| WaveSample {
            x,
            value: series_value(coeffs, x, params),
        })
        .collect()
}

/// Coherent packet at x from one of its closed expressions.
pub fn psi_closed(
    label: CoherentLabel,
    x: f64,
    t: f64,
    params: &OscillatorParams,
    form: ClosedForm,
) -> WaveSample {
    let length = params.length_scale();
    let prefactor = PI_POW_NEG_QUARTER / length.sqrt();
    let half_omega_t = 0.5 * params.omega() * t;
    let value = match form {
        ClosedForm::ComplexCenter => {
            let chi_t = evolve_label(label, t, params).chi();
            let center = chi_t * (2.0 * params.hbar() / (params.mass() * params.omega())).sqrt();
            let shifted = (Complex64::new(x, 0.0) - center) / length;
            let exponent = Complex64::new(-0.5 * label.mean_occupation(), -half_omega_t)
                + 0.5 * chi_t * chi_t
                - 0.5 * shifted * shifted;
            prefactor * exponent.exp()
        }
        ClosedForm::MeanPhase => {
            let means = averages_closedform(label, t, params);
            let hbar = params.hbar();
            let phase = -(half_omega_t + means.mean_p * means.mean_x / (2.0 * hbar))
                + means.mean_p * x / hbar;
            let dx = (x - means.mean_x) / length;
            let (s, c) = phase.sin_cos();
            prefactor * (-0.5 * dx * dx).exp() * Complex64::new(c, s)
        }
    };
    WaveSample { x, value }
}

/// Ordered positions with positive quadrature weights.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialGrid {
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl SpatialGrid {
    pub fn new(points: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(Error::LengthMismatch {
                left: points.len(),
                right: weights.len(),
            });
        }
        if points
            .windows(2)
            .any(|w| w[1].partial_cmp(&w[0]) != Some(Ordering::Greater))
        {
            return Err(Error::InvalidGrid(
                "points must be strictly increasing".into(),
            ));
        }
        if weights.iter().any(|w| !(*w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidGrid(
                "weights must be positive and finite".into(),
            ));
        }
        Ok(Self { points, weights })
    }

    /// Trapezoid rule on `points` equally spaced nodes spanning [lo, hi].
    pub fn trapezoid(lo: f64, hi: f64, points: usize) -> Result<Self> {
        if points < 2 || hi.partial_cmp(&lo) != Some(Ordering::Greater) {
            return Err(Error::InvalidGrid(format!(
                "need hi > lo and at least 2 points, got [{lo}, {hi}] with {points}"
            )));
        }
        let step = (hi - lo) / (points - 1) as f64;
        let xs = (0..points).map(|i| lo + step * i as f64).collect();
        let mut ws = vec![step; points];
        ws[0] = 0.5 * step;
        ws[points - 1] = 0.5 * step;
        Self::new(xs, ws)
    }

    /// Trapezoid grid spanning center ± `halfwidth` oscillator lengths.
    pub fn centered(
        center: f64,
        halfwidth: f64,
        points: usize,
        params: &OscillatorParams,
    ) -> Result<Self> {
        let span = halfwidth * params.length_scale();
        Self::trapezoid(center - span, center + span, points)
    }

    /// Default grid that follows the packet: x̄(t) ± 10 lengths, 2001 points.
    pub fn around_packet(label: CoherentLabel, t: f64, params: &OscillatorParams) -> Self {
        let center = averages_closedform(label, t, params).mean_x;
        Self::centered(center, DEFAULT_HALFWIDTH, DEFAULT_GRID_POINTS, params)
            .expect("valid default grid")
    }

    /// Gauss–Hermite rule with `order` nodes, rescaled so that the weights
    /// integrate plain functions of x (the e^(−ξ²) weight is divided out).
    pub fn gauss_hermite(order: usize, center: f64, params: &OscillatorParams) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGrid(
                "Gauss-Hermite order must be positive".into(),
            ));
        }
        let length = params.length_scale();
        let (nodes, weights) = gauss_hermite_rule(order);
        let points = nodes.iter().map(|z| center + length * z).collect();
        let weights = nodes
            .iter()
            .zip(&weights)
            .map(|(z, w)| length * w * (z * z).exp())
            .collect();
        Self::new(points, weights)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest spacing between neighbouring nodes.
    pub fn max_step(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0, f64::max)
    }
}

/// Nodes (ascending) and weights of the n-point rule for ∫ f(ξ) e^(−ξ²) dξ.
///
/// Newton iteration on the normalized Hermite functions with the usual
/// asymptotic starting guesses.
pub fn gauss_hermite_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    const EPS: f64 = 3e-15;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let n_f = n as f64;
    let mut z = 0.0_f64;
    for i in 0..n.div_ceil(2) {
        z = match i {
            0 => (2.0 * n_f + 1.0).sqrt() - 1.855_75 * (2.0 * n_f + 1.0).powf(-0.166_67),
            1 => z - 1.14 * n_f.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut derivative = 0.0;
        for _ in 0..100 {
            let (mut p1, mut p2) = (PI_POW_NEG_QUARTER, 0.0);
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let j_f = j as f64;
                p1 = z * (2.0 / (j_f + 1.0)).sqrt() * p2 - (j_f / (j_f + 1.0)).sqrt() * p3;
            }
            derivative = (2.0 * n_f).sqrt() * p2;
            let previous = z;
            z = previous - p1 / derivative;
            if (z - previous).abs() <= EPS * z.abs().max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (derivative * derivative);
        weights[n - 1 - i] = weights[i];
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

/// Σ weights·|value|².
pub fn quadrature_norm(samples: &[WaveSample], grid: &SpatialGrid) -> Result<f64> {
    if samples.len() != grid.len() {
        return Err(Error::LengthMismatch {
            left: samples.len(),
            right: grid.len(),
        });
    }
    Ok(samples
        .iter()
        .zip(grid.weights())
        .map(|(s, w)| w * s.abs2())
        .sum())
}

/// Norm, mean position and position variance of |ψ|² on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PacketMoments {
    pub norm: f64,
    pub mean: f64,
    pub variance: f64,
}

pub fn packet_moments(samples: &[WaveSample], grid: &SpatialGrid) -> Result<PacketMoments> {
    let norm = quadrature_norm(samples, grid)?;
    let density = || {
        samples
            .iter()
            .zip(grid.weights())
            .map(|(s, w)| (s.x, w * s.abs2()))
    };
    let mean = density().map(|(x, d)| x * d).sum::<f64>() / norm;
    let variance = density().map(|(x, d)| (x - mean).powi(2) * d).sum::<f64>() / norm;
    Ok(PacketMoments {
        norm,
        mean,
        variance,
    })
}

/// Position of the largest |ψ|² sample.
pub fn density_peak(samples: &[WaveSample]) -> Option<f64> {
    samples
        .iter()
        .max_by(|a, b| a.abs2().total_cmp(&b.abs2()))
        .map(|s| s.x)
}

/// (Mω/πħ)^(1/4), the amplitude scale of φ_0 at the origin.
pub fn ground_amplitude(params: &OscillatorParams) -> f64 {
    (params.mass() * params.omega() / (PI * params.hbar())).powf(0.25)
}
