use std::f64::consts::TAU;

use num_complex::Complex64;
use proptest::prelude::*;

use qho_coherent::coherent::{auto_n_max, CoherentLabel};
use qho_coherent::observables::averages_closedform;
use qho_coherent::params::OscillatorParams;
use qho_coherent::symmetry::{ehrenfest_residual, Trajectory};
use qho_coherent::wavefunction::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn series_matches_closed_form(r in 0.0..2.0f64, theta in 0.0..TAU, t in 0.0..TAU, x in -8.0..8.0f64) {
        let p = OscillatorParams::natural();
        let label = CoherentLabel::from(Complex64::from_polar(r, theta));
        let n_max = auto_n_max(label, 1e-28).unwrap();
        let series = psi_series(label, x, t, &p, n_max).value;
        for form in [ClosedForm::ComplexCenter, ClosedForm::MeanPhase] {
            let closed = psi_closed(label, x, t, &p, form).value;
            prop_assert!((series - closed).norm() < 1e-10, "{form:?}: {:e}", (series - closed).norm());
        }
    }

    #[test]
    fn packet_moments_track_means(r in 0.0..3.0f64, theta in 0.0..TAU, t in 0.0..TAU, mass in 0.5..2.0f64, omega in 0.5..2.0f64) {
        let p = OscillatorParams::new(1.0, mass, omega).unwrap();
        let label = CoherentLabel::from(Complex64::from_polar(r, theta));
        let grid = SpatialGrid::around_packet(label, t, &p);
        let samples: Vec<_> = grid.points().iter().map(|&x| psi_closed(label, x, t, &p, ClosedForm::MeanPhase)).collect();
        let moments = packet_moments(&samples, &grid).unwrap();
        let means = averages_closedform(label, t, &p);
        let width = p.hbar() / (2.0 * mass * omega);
        prop_assert!((moments.norm - 1.0).abs() < 1e-8);
        prop_assert!((moments.mean - means.mean_x).abs() < 1e-8 * (1.0 + means.mean_x.abs()));
        prop_assert!((moments.variance - width).abs() < 1e-8);
        let peak = density_peak(&samples).unwrap();
        prop_assert!((peak - means.mean_x).abs() <= grid.max_step());
    }
}

#[test]
fn eigenfunctions_are_orthonormal() {
    for p in [
        OscillatorParams::natural(),
        OscillatorParams::new(0.7, 1.9, 0.4).unwrap(),
    ] {
        let grid = SpatialGrid::gauss_hermite(40, 0.0, &p).unwrap();
        let table: Vec<Vec<f64>> = grid
            .points()
            .iter()
            .map(|&x| eigenfunctions(10, x, &p))
            .collect();
        for m in 0..=10 {
            for n in 0..=10 {
                let overlap: f64 = table
                    .iter()
                    .zip(grid.weights())
                    .map(|(phi, w)| w * phi[m] * phi[n])
                    .sum();
                let expected = if m == n { 1.0 } else { 0.0 };
                assert!((overlap - expected).abs() < 1e-7, "({m},{n}) {overlap}");
            }
        }
    }
}

#[test]
fn high_order_eigenfunctions_stay_finite() {
    let p = OscillatorParams::natural();
    let phi = eigenfunctions(400, 12.0, &p);
    assert!(phi.iter().all(|v| v.is_finite()));
    assert!(!hermite(400, 12.0).is_finite());
}

#[test]
fn phase_gradient_is_mean_momentum() {
    let p = OscillatorParams::new(1.0, 1.3, 0.8).unwrap();
    let label = CoherentLabel::new(1.1, -0.6);
    let h = 1e-5;
    for t in [0.0, 0.9, 2.5] {
        let means = averages_closedform(label, t, &p);
        let at = |x: f64| psi_closed(label, x, t, &p, ClosedForm::ComplexCenter).value;
        let (lo, hi) = (at(means.mean_x - h), at(means.mean_x + h));
        let gradient = (hi / lo).arg() / (2.0 * h);
        assert!(
            (gradient - means.mean_p / p.hbar()).abs() < 1e-6,
            "t={t}: {gradient}"
        );
    }
}

/// Σ_{j>k} |t^j H_j(x)/j!| for k = 0..=k_max, from an independent term table.
fn absolute_tail(x: f64, t: f64, k_max: usize, extra: usize) -> Vec<f64> {
    let mut terms = vec![1.0f64];
    let (mut h_prev, mut h_cur, mut factor) = (0.0f64, 1.0f64, 1.0f64);
    for k in 1..=k_max + extra {
        let h_next = 2.0 * x * h_cur - 2.0 * (k - 1) as f64 * h_prev;
        h_prev = h_cur;
        h_cur = h_next;
        factor *= t / k as f64;
        terms.push((factor * h_cur).abs());
    }
    (0..=k_max).map(|k| terms[k + 1..].iter().sum()).collect()
}

#[test]
fn generating_residual_under_falling_envelope() {
    // The residual itself can tick up where H_k(x) is near a zero; its
    // absolute-term envelope cannot.
    for (x, t) in [(0.3, 0.5), (0.7, 0.4), (1.0, -0.8), (-2.0, 0.7), (2.9, 0.9)] {
        let envelope = absolute_tail(x, t, 60, 80);
        let hump = envelope
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        for pair in envelope[hump..].windows(2) {
            assert!(pair[1] <= pair[0]);
        }
        let scale = (2.0 * x * t - t * t).exp();
        for (k, bound) in envelope.iter().enumerate() {
            let residual = generating_sum_check(x, t, k);
            assert!(
                residual <= bound + 1e-14 * scale,
                "({x},{t}) k={k}: {residual:e} > {bound:e}"
            );
        }
        assert!(generating_sum_check(x, t, 60) < 1e-12);
    }
    assert!(generating_sum_check(0.7, 0.4, 40) < 1e-12);
    assert_eq!(generating_sum_check(1.3, 0.0, 0), 0.0);
}

#[test]
fn ehrenfest_residual_scales_quadratically() {
    let p = OscillatorParams::natural();
    let label = CoherentLabel::new(1.0, 1.0);
    let residual = |dt: f64| {
        let samples = (TAU / dt).round() as usize + 1;
        let traj = Trajectory::closed_form(label, &p, 0.0, dt, samples).unwrap();
        ehrenfest_residual(&traj, &p).unwrap()
    };
    let (coarse, fine) = (residual(0.04), residual(0.02));
    for ratio in [coarse.x() / fine.x(), coarse.p() / fine.p()] {
        assert!((3.6..4.4).contains(&ratio), "{ratio}");
    }
}
