//! Stationary and dynamical coherent states, their Poisson statistics and
//! the error committed by cutting the expansion at n_max.

use ndarray::Array1;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{Operator, StateVector};
use crate::params::OscillatorParams;

/// Tail mass below which the automatic cutoff is considered adequate.
pub const AUTO_TAIL_TOLERANCE: f64 = 1e-12;
/// Largest cutoff the automatic rule will pick.
pub const AUTO_N_MAX_CAP: usize = 1024;

/// The complex eigenvalue χ labelling a coherent state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherentLabel(Complex64);

impl CoherentLabel {
    /// Panics on non-finite parts; use [`CoherentLabel::try_new`] for input data.
    pub fn new(re: f64, im: f64) -> Self {
        Self::try_new(Complex64::new(re, im)).expect("coherent label must be finite")
    }

    pub fn try_new(chi: Complex64) -> Result<Self> {
        if chi.re.is_finite() && chi.im.is_finite() {
            Ok(Self(chi))
        } else {
            Err(Error::InvalidParams(format!(
                "coherent label {chi} is not finite"
            )))
        }
    }

    pub fn chi(&self) -> Complex64 {
        self.0
    }

    /// |χ|², the mean occupation.
    pub fn mean_occupation(&self) -> f64 {
        self.0.norm_sqr()
    }

    pub fn modulus(&self) -> f64 {
        self.0.norm()
    }
}

impl From<Complex64> for CoherentLabel {
    fn from(chi: Complex64) -> Self {
        Self(chi)
    }
}

/// e^(iθ) built from cos and sin.
pub(crate) fn unit_phase(theta: f64) -> Complex64 {
    let (s, c) = theta.sin_cos();
    Complex64::new(c, s)
}

/// C_n = χⁿ/√(n!)·e^(−|χ|²/2) for n = 0..=n_max via C_{n+1} = C_n·χ/√(n+1).
///
/// The result is not renormalized: its squared norm is one minus the
/// [`truncation_tail`].
pub fn coherent_coefficients(label: CoherentLabel, n_max: usize) -> StateVector {
    let chi = label.chi();
    let mut coeffs = Array1::<Complex64>::zeros(n_max + 1);
    let mut current = Complex64::new((-0.5 * label.mean_occupation()).exp(), 0.0);
    coeffs[0] = current;
    for n in 1..=n_max {
        current = current * chi / (n as f64).sqrt();
        coeffs[n] = current;
    }
    StateVector::new(coeffs, 0.0).expect("non-empty")
}

/// Poisson weight e^(−|χ|²)|χ|^(2n)/n!, evaluated in log space.
pub fn occupation_probability(label: CoherentLabel, n: usize) -> f64 {
    poisson(label.mean_occupation(), n)
}

fn poisson(lambda: f64, n: usize) -> f64 {
    if lambda == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let n_f = n as f64;
    (-lambda + n_f * lambda.ln() - libm::lgamma(n_f + 1.0)).exp()
}

/// χ(t) = χ·e^(−iωt).
pub fn evolve_label(label: CoherentLabel, t: f64, params: &OscillatorParams) -> CoherentLabel {
    CoherentLabel(label.chi() * unit_phase(-params.omega() * t))
}

/// The dynamical coherent state: C_n(χ)·e^(−iε_n t/ħ), stamped with time t.
pub fn dynamical_coherent_state(
    label: CoherentLabel,
    t: f64,
    params: &OscillatorParams,
    n_max: usize,
) -> StateVector {
    let mut coeffs = coherent_coefficients(label, n_max).into_coeffs();
    let omega_t = params.omega() * t;
    for (n, c) in coeffs.iter_mut().enumerate() {
        *c *= unit_phase(-omega_t * (n as f64 + 0.5));
    }
    StateVector::new(coeffs, t).expect("non-empty")
}

/// ‖(a − χ(t))|state⟩‖.
///
/// Within the truncated basis the only nonzero component is at n_max, so for a
/// coherent state this equals |χ|·|C_{n_max}|.
pub fn annihilation_residual(
    state: &StateVector,
    evolved: CoherentLabel,
    a: &Operator,
) -> Result<f64> {
    let lowered = a.apply(state)?;
    let chi = evolved.chi();
    Ok(lowered
        .coeffs()
        .iter()
        .zip(state.coeffs().iter())
        .map(|(l, c)| (l - chi * c).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// Upper bound |C_{n_max}|·√(n_max+1) on the annihilation residual, valid
/// whenever |χ| ≤ √(n_max+1).
pub fn annihilation_tail_bound(label: CoherentLabel, n_max: usize) -> f64 {
    occupation_probability(label, n_max).sqrt() * ((n_max + 1) as f64).sqrt()
}

/// Poisson mass beyond the cutoff, Σ_{n>n_max} e^(−|χ|²)|χ|^(2n)/n!.
pub fn truncation_tail(label: CoherentLabel, n_max: usize) -> f64 {
    let lambda = label.mean_occupation();
    if lambda == 0.0 {
        return 0.0;
    }
    if (n_max as f64) < lambda {
        // bulk of the distribution is above the cutoff; the head is the small side
        let head: f64 = (0..=n_max).map(|n| poisson(lambda, n)).sum();
        return (1.0 - head).max(0.0);
    }
    let mut n = n_max + 1;
    let mut term = poisson(lambda, n);
    let mut sum = 0.0;
    while term > 0.0 && term > sum * 1e-18 {
        sum += term;
        n += 1;
        term *= lambda / n as f64;
    }
    sum
}

/// Smallest n_max whose tail is below `tolerance`, searched up to
/// [`AUTO_N_MAX_CAP`].
pub fn auto_n_max(label: CoherentLabel, tolerance: f64) -> Result<usize> {
    let cap_tail = truncation_tail(label, AUTO_N_MAX_CAP);
    if cap_tail >= tolerance {
        return Err(Error::TruncationCap {
            cap: AUTO_N_MAX_CAP,
            tolerance,
            tail: cap_tail,
        });
    }
    // tail is nonincreasing in n_max
    let (mut lo, mut hi) = (0usize, AUTO_N_MAX_CAP);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if truncation_tail(label, mid) < tolerance {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::make_ladder;
    use std::f64::consts::PI;

    #[test]
    fn vacuum_label_gives_ground_state() {
        let s = coherent_coefficients(CoherentLabel::new(0.0, 0.0), 5);
        assert_eq!(s.coeffs()[0], Complex64::new(1.0, 0.0));
        assert!(s
            .coeffs()
            .iter()
            .skip(1)
            .all(|c| *c == Complex64::new(0.0, 0.0)));
        assert_eq!(s.time(), 0.0);
    }

    #[test]
    fn single_level_coefficient() {
        let s = coherent_coefficients(CoherentLabel::new(1.0, 0.0), 0);
        assert!((s.coeffs()[0].re - 0.606_530_659_712_633_4).abs() < 1e-15);
    }

    #[test]
    fn unit_label_norm_at_64_levels() {
        let s = coherent_coefficients(CoherentLabel::new(1.0, 0.0), 64);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn poisson_examples() {
        let one = CoherentLabel::new(1.0, 0.0);
        assert!((occupation_probability(one, 0) - 0.367_879_441_171_442_3).abs() < 1e-15);
        let zero = CoherentLabel::new(0.0, 0.0);
        assert_eq!(occupation_probability(zero, 0), 1.0);
        assert_eq!(occupation_probability(zero, 1), 0.0);
        assert_eq!(occupation_probability(zero, 7), 0.0);

        let two = CoherentLabel::new(0.0, 2.0);
        let probs: Vec<f64> = (0..12).map(|n| occupation_probability(two, n)).collect();
        let max = probs.iter().cloned().fold(0.0, f64::max);
        let modes: Vec<usize> = (0..12)
            .filter(|&n| (probs[n] - max).abs() <= 1e-14 * max)
            .collect();
        assert_eq!(modes, vec![3, 4]);
    }

    #[test]
    fn large_level_poisson_stays_finite() {
        let p = occupation_probability(CoherentLabel::new(3.0, 0.0), 400);
        assert!(p.is_finite() && (0.0..1e-300).contains(&p));
        let p = occupation_probability(CoherentLabel::new(30.0, 0.0), 900);
        assert!(p > 0.0 && p < 0.02);
    }

    #[test]
    fn label_evolution() {
        let params = OscillatorParams::natural();
        let chi = CoherentLabel::new(0.3, -1.2);
        assert_eq!(evolve_label(chi, 0.0, &params), chi);
        let flipped = evolve_label(CoherentLabel::new(1.0, 0.0), PI, &params).chi();
        assert!((flipped - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        let params = OscillatorParams::new(1.0, 1.0, 2.0).unwrap();
        let evolved = evolve_label(chi, 17.3, &params);
        assert!((evolved.modulus() - chi.modulus()).abs() < 1e-15);
    }

    #[test]
    fn dcs_zero_time_and_full_period() {
        let params = OscillatorParams::natural();
        let chi = CoherentLabel::new(1.0, 0.0);
        let start = coherent_coefficients(chi, 20);
        assert_eq!(
            dynamical_coherent_state(chi, 0.0, &params, 20).coeffs(),
            start.coeffs()
        );

        let period = dynamical_coherent_state(chi, 2.0 * PI, &params, 20);
        assert_eq!(period.time(), 2.0 * PI);
        for (c, c0) in period.coeffs().iter().zip(start.coeffs().iter()) {
            assert!((c - c0 * unit_phase(-PI)).norm() < 1e-13);
        }
    }

    #[test]
    fn dcs_norm_is_time_independent() {
        let params = OscillatorParams::natural();
        let chi = CoherentLabel::new(-0.4, 1.1);
        let n0 = dynamical_coherent_state(chi, 0.0, &params, 30).norm_sqr();
        for t in [0.1, 1.0, 13.7, -4.2] {
            let nt = dynamical_coherent_state(chi, t, &params, 30).norm_sqr();
            assert!((nt - n0).abs() < 1e-15);
        }
    }

    #[test]
    fn residual_examples() {
        let (a, _) = make_ladder(6);
        let ground = coherent_coefficients(CoherentLabel::new(0.0, 0.0), 6);
        assert_eq!(
            annihilation_residual(&ground, CoherentLabel::new(0.0, 0.0), &a).unwrap(),
            0.0
        );

        let chi = CoherentLabel::new(1.0, 0.0);
        let (a, _) = make_ladder(64);
        let r = annihilation_residual(&coherent_coefficients(chi, 64), chi, &a).unwrap();
        assert!(r < 1e-10);
        // rounding in the bulk sits far above the 1e-44 tail bound
        assert!(r <= annihilation_tail_bound(chi, 64) + 1e-15);

        let chi = CoherentLabel::new(3.0, 0.0);
        let (a, _) = make_ladder(12);
        let r = annihilation_residual(&coherent_coefficients(chi, 12), chi, &a).unwrap();
        assert!(r > 0.01);
    }

    #[test]
    fn residual_dimension_mismatch() {
        let (a, _) = make_ladder(3);
        let s = coherent_coefficients(CoherentLabel::new(1.0, 0.0), 4);
        assert!(matches!(
            annihilation_residual(&s, CoherentLabel::new(1.0, 0.0), &a),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn tail_examples() {
        for n_max in [0, 3, 50] {
            assert_eq!(truncation_tail(CoherentLabel::new(0.0, 0.0), n_max), 0.0);
        }
        let t = truncation_tail(CoherentLabel::new(0.0, 1.0), 0);
        assert!((t - 0.632_120_558_828_557_7).abs() < 1e-15);
    }

    #[test]
    fn tail_nonincreasing() {
        let chi = CoherentLabel::new(2.5, -1.0);
        let tails: Vec<f64> = (0..80).map(|n| truncation_tail(chi, n)).collect();
        assert!(tails.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn auto_cutoff_is_smallest_adequate() {
        let chi = CoherentLabel::new(1.0, 1.0);
        let n = auto_n_max(chi, AUTO_TAIL_TOLERANCE).unwrap();
        assert!(truncation_tail(chi, n) < AUTO_TAIL_TOLERANCE);
        assert!(truncation_tail(chi, n - 1) >= AUTO_TAIL_TOLERANCE);
        assert_eq!(
            auto_n_max(CoherentLabel::new(0.0, 0.0), AUTO_TAIL_TOLERANCE).unwrap(),
            0
        );
        assert!(matches!(
            auto_n_max(CoherentLabel::new(40.0, 0.0), AUTO_TAIL_TOLERANCE),
            Err(Error::TruncationCap { .. })
        ));
    }
}
