//! The acceptance suite: every closed-form claim about the dynamical coherent
//! state checked against brute-force numerics at fixed tolerances.
//!
//! Each criterion is a function returning a [`CriterionOutcome`]; [`run_all`]
//! evaluates them in order. Randomized checks draw from a ChaCha stream seeded
//! by [`VerifyConfig::seed`], so a given seed always reproduces the same
//! states and angles.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::coherent::{
    annihilation_residual, auto_n_max, coherent_coefficients, dynamical_coherent_state,
    evolve_label, truncation_tail, unit_phase, CoherentLabel, AUTO_TAIL_TOLERANCE,
};
use crate::error::Result;
use crate::fock::{
    expectation, fock_state, make_hamiltonian, make_ladder, make_number, Operator, StateVector,
};
use crate::observables::{uncertainty_fock, BruteForce};
use crate::params::OscillatorParams;
use crate::symmetry::{
    classical_energy, ehrenfest_residual, propagate_fock, rotate_xp, transform_state_phase,
    PhaseAngle, Trajectory,
};
use crate::wavefunction::{
    generating_sum_check, packet_moments, psi_closed, series_on_grid, ClosedForm, SpatialGrid,
};

/// Labels used by the minimal-uncertainty, anomalous-average and energy checks.
pub const CHI_SET: [(f64, f64); 5] = [(0.0, 0.0), (1.0, 0.0), (0.0, 2.0), (1.0, 1.0), (-1.5, 0.5)];

/// Labels with |χ| ≤ 2 for the wave-packet and eigenstate checks.
pub const PACKET_CHI_SET: [(f64, f64); 7] = [
    (0.0, 0.0),
    (1.0, 0.0),
    (0.0, 2.0),
    (1.0, 1.0),
    (-1.5, 0.5),
    (2.0, 0.0),
    (-1.2, -1.6),
];

pub const PACKET_N_MAX: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Optional user-supplied (χ, n_max) whose truncation adequacy is checked
    /// alongside the fixed criteria.
    pub probe: Option<(CoherentLabel, usize)>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 20_240_917,
            probe: None,
        }
    }
}

/// Result of one acceptance criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionOutcome {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed value of the checked quantity.
    pub measured: f64,
    pub threshold: f64,
    pub detail: String,
}

impl CriterionOutcome {
    fn new(
        id: &'static str,
        name: &'static str,
        passed: bool,
        measured: f64,
        threshold: f64,
        detail: String,
    ) -> Self {
        Self {
            id,
            name,
            passed,
            measured,
            threshold,
            detail,
        }
    }

    /// One human-readable line, e.g. `PASS  1 minimal-uncertainty ...`.
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {:<26} measured={:.3e} threshold={:.1e}  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.measured,
            self.threshold,
            self.detail
        )
    }
}

fn label((re, im): (f64, f64)) -> CoherentLabel {
    CoherentLabel::new(re, im)
}

fn unit() -> OscillatorParams {
    OscillatorParams::natural()
}

/// Eight sample times spanning two periods, endpoints included.
fn two_period_times(params: &OscillatorParams) -> impl Iterator<Item = f64> {
    let span = 2.0 * params.period();
    (0..8).map(move |k| span * k as f64 / 7.0)
}

/// Coherent state at t, padded two levels above its cutoff so X² and P² are
/// exact on its support.
fn padded_coherent(chi: CoherentLabel, t: f64, params: &OscillatorParams) -> Result<StateVector> {
    let n_max = auto_n_max(chi, AUTO_TAIL_TOLERANCE)?;
    dynamical_coherent_state(chi, t, params, n_max).padded(n_max + 2)
}

/// 1: brute-force uncertainty of coherent states equals ħ/2.
pub fn minimal_uncertainty() -> Result<CriterionOutcome> {
    const TOL: f64 = 1e-9;
    let params = unit();
    let mut worst = 0.0_f64;
    for &c in &CHI_SET {
        let chi = label(c);
        for t in two_period_times(&params) {
            let state = padded_coherent(chi, t, &params)?;
            let r = BruteForce::new(&params, state.n_max()).evaluate(&state)?;
            worst = worst.max((r.uncertainty - params.hbar() / 2.0).abs());
        }
    }
    Ok(CriterionOutcome::new(
        "1",
        "minimal-uncertainty",
        worst < TOL,
        worst,
        TOL,
        format!("{} labels x 8 times, auto n_max", CHI_SET.len()),
    ))
}

/// 2: brute-force I_n of Fock levels equals ħ(n + 1/2).
pub fn fock_uncertainty() -> Result<CriterionOutcome> {
    const TOL: f64 = 1e-10;
    let params = unit();
    let n_max = 40;
    let bf = BruteForce::new(&params, n_max);
    let mut worst = 0.0_f64;
    for n in 0..=20 {
        let r = bf.evaluate(&fock_state(n, n_max)?)?;
        worst = worst.max((r.uncertainty - uncertainty_fock(n, &params)).abs());
    }
    Ok(CriterionOutcome::new(
        "2",
        "fock-uncertainty",
        worst < TOL,
        worst,
        TOL,
        "n = 0..20 at n_max = 40".into(),
    ))
}

/// 3: ⟨a⟩, ⟨a²⟩, ⟨a⁺a⟩ match χ(t), χ(t)², |χ|²; vanish exactly on Fock states.
pub fn anomalous_averages() -> Result<CriterionOutcome> {
    const TOL: f64 = 1e-9;
    let params = unit();
    let mut worst = 0.0_f64;
    for &c in &CHI_SET {
        let chi = label(c);
        for t in two_period_times(&params) {
            let state = padded_coherent(chi, t, &params)?;
            let r = BruteForce::new(&params, state.n_max()).evaluate(&state)?;
            let chi_t = evolve_label(chi, t, &params).chi();
            worst = worst
                .max((r.a_avg - chi_t).norm())
                .max((r.a2_avg - chi_t * chi_t).norm())
                .max((r.n_avg - chi.mean_occupation()).abs());
        }
    }
    let n_max = 40;
    let bf = BruteForce::new(&params, n_max);
    let mut fock_exact = true;
    for n in 0..=20 {
        let r = bf.evaluate(&fock_state(n, n_max)?)?;
        fock_exact &= r.a_avg == Complex64::new(0.0, 0.0) && r.a2_avg == Complex64::new(0.0, 0.0);
    }
    Ok(CriterionOutcome::new(
        "3",
        "anomalous-averages",
        worst < TOL && fock_exact,
        worst,
        TOL,
        format!("coherent labels vs closed form; Fock <a>=<a^2>=0 exactly: {fock_exact}"),
    ))
}

/// 4: centered-difference Ehrenfest residuals below 1e-5 at dt = 1e-3 and
/// shrinking by 4 (±20%) when dt halves.
pub fn ehrenfest() -> Result<CriterionOutcome> {
    const TOL: f64 = 1e-5;
    const RATIO: (f64, f64) = (3.2, 4.8);
    let params = unit();
    let chi = CoherentLabel::new(1.0, 0.0);
    let n_max = auto_n_max(chi, AUTO_TAIL_TOLERANCE)?;
    let residual_at = |dt: f64| -> Result<_> {
        let samples = (params.period() / dt).round() as usize + 1;
        let traj = Trajectory::coherent_bruteforce(chi, &params, n_max, 0.0, dt, samples)?;
        ehrenfest_residual(&traj, &params)
    };
    let coarse = residual_at(1e-3)?;
    let fine = residual_at(5e-4)?;
    let ratio_x = coarse.x() / fine.x();
    let ratio_p = coarse.p() / fine.p();
    let in_band = |r: f64| (RATIO.0..=RATIO.1).contains(&r);
    let worst = coarse.x().max(coarse.p());
    let passed = worst < TOL && in_band(ratio_x) && in_band(ratio_p);
    Ok(CriterionOutcome::new(
        "4",
        "ehrenfest",
        passed,
        worst,
        TOL,
        format!("dt-halving ratios x={ratio_x:.3} p={ratio_p:.3} (band 3.2..4.8)"),
    ))
}

/// 5: brute-force energy is constant in time and equals ħω(|χ|² + 1/2).
pub fn energy_constancy() -> Result<CriterionOutcome> {
    const SPREAD_TOL: f64 = 1e-10;
    const VALUE_TOL: f64 = 1e-9;
    let params = unit();
    let mut worst_spread = 0.0_f64;
    let mut worst_value = 0.0_f64;
    for &c in &CHI_SET {
        let chi = label(c);
        let n_max = auto_n_max(chi, AUTO_TAIL_TOLERANCE)?;
        let dt = 2.0 * params.period() / 99.0;
        let traj = Trajectory::coherent_bruteforce(chi, &params, n_max, 0.0, dt, 100)?;
        let energies: Vec<f64> = traj.records().iter().map(|r| r.energy).collect();
        let (lo, hi) = energies
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &e| {
                (lo.min(e), hi.max(e))
            });
        worst_spread = worst_spread.max(hi - lo);
        let expected = params.hbar() * params.omega() * (chi.mean_occupation() + 0.5);
        worst_value = energies
            .iter()
            .fold(worst_value, |w, e| w.max((e - expected).abs()));
    }
    let passed = worst_spread < SPREAD_TOL && worst_value < VALUE_TOL;
    Ok(CriterionOutcome::new(
        "5",
        "energy-constancy",
        passed,
        worst_spread,
        SPREAD_TOL,
        format!("100 samples per label; max |E - hw(|chi|^2+1/2)| = {worst_value:.3e} (tol 1e-9)"),
    ))
}

/// 6: truncated series equals both closed forms on the default grid and the
/// packet variance stays ħ/(2Mω).
pub fn wave_packet() -> Result<CriterionOutcome> {
    const TOL: f64 = 1e-8;
    let params = unit();
    let target_variance = params.x_scale().powi(2);
    let mut worst_diff = 0.0_f64;
    let mut worst_var = 0.0_f64;
    for &c in &PACKET_CHI_SET {
        let chi = label(c);
        for t in two_period_times(&params) {
            let grid = SpatialGrid::around_packet(chi, t, &params);
            let series = series_on_grid(chi, t, &params, PACKET_N_MAX, &grid);
            for s in &series {
                for form in [ClosedForm::ComplexCenter, ClosedForm::MeanPhase] {
                    worst_diff = worst_diff
                        .max((s.value - psi_closed(chi, s.x, t, &params, form).value).norm());
                }
            }
            let moments = packet_moments(&series, &grid)?;
            worst_var = worst_var.max((moments.variance - target_variance).abs());
        }
    }
    let passed = worst_diff < TOL && worst_var < TOL;
    Ok(CriterionOutcome::new(
        "6",
        "wave-packet",
        passed,
        worst_diff,
        TOL,
        format!("n_max = 64, |chi| <= 2; max |var - hbar/2Mw| = {worst_var:.3e} (tol 1e-8)"),
    ))
}

/// 7: the Hermite generating-function identity at random (x, t).
pub fn generating_function(seed: u64) -> CriterionOutcome {
    const TOL: f64 = 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7);
    let worst = (0..20)
        .map(|_| {
            let x = rng.random_range(-3.0..=3.0);
            let t = rng.random_range(-0.9..=0.9);
            generating_sum_check(x, t, 60)
        })
        .fold(0.0, f64::max);
    CriterionOutcome::new(
        "7",
        "generating-function",
        worst < TOL,
        worst,
        TOL,
        "20 random points, |x| <= 3, |t| <= 0.9, k_max = 60".into(),
    )
}

/// 8: ‖(a − χ(t))|Φ⟩‖ is negligible at n_max = 64 and large when
/// under-truncated (χ = 3, n_max = 12).
pub fn annihilation_eigenstate() -> Result<CriterionOutcome> {
    const TOL: f64 = 1e-10;
    const UNDER_FLOOR: f64 = 1e-2;
    let params = unit();
    let (a, _) = make_ladder(PACKET_N_MAX);
    let mut worst = 0.0_f64;
    for &c in &PACKET_CHI_SET {
        let chi = label(c);
        for t in two_period_times(&params) {
            let state = dynamical_coherent_state(chi, t, &params, PACKET_N_MAX);
            worst = worst.max(annihilation_residual(
                &state,
                evolve_label(chi, t, &params),
                &a,
            )?);
        }
    }
    let chi = CoherentLabel::new(3.0, 0.0);
    let (a12, _) = make_ladder(12);
    let under = annihilation_residual(&coherent_coefficients(chi, 12), chi, &a12)?;
    let passed = worst < TOL && under > UNDER_FLOOR;
    Ok(CriterionOutcome::new(
        "8",
        "annihilation-eigenstate",
        passed,
        worst,
        TOL,
        format!("under-truncated chi=3, n_max=12 residual = {under:.3e} (must exceed 1e-2)"),
    ))
}

/// Complex Gaussian coefficients, normalized.
pub fn random_state(rng: &mut impl Rng, n_max: usize) -> StateVector {
    let coeffs: Vec<Complex64> = (0..=n_max)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    StateVector::from_vec(coeffs, 0.0)
        .expect("non-empty")
        .normalized()
}

/// 9: ⟨H⟩ and ⟨a⁺a⟩ invariant under the phase transformation, ⟨a⟩ rotating
/// by e^(−iα), and the x–p rotation conserving the classical energy.
pub fn phase_symmetry(seed: u64) -> Result<CriterionOutcome> {
    const INVARIANT_TOL: f64 = 1e-10;
    const ROTATION_TOL: f64 = 1e-12;
    let params = unit();
    let n_max = 20;
    let hamiltonian = make_hamiltonian(&params, n_max);
    let number = make_number(n_max);
    let (a, _) = make_ladder(n_max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9);
    let (mut worst_inv, mut worst_rot, mut worst_xp) = (0.0_f64, 0.0_f64, 0.0_f64);
    for _ in 0..100 {
        let state = random_state(&mut rng, n_max);
        let alpha = PhaseAngle::new(rng.random_range(-TAU..TAU))?;
        let rotated = transform_state_phase(&state, alpha);
        for op in [&hamiltonian, &number] {
            worst_inv =
                worst_inv.max((expectation(op, &rotated)? - expectation(op, &state)?).norm());
        }
        let before = expectation(&a, &state)?;
        let after = expectation(&a, &rotated)?;
        worst_rot = worst_rot
            .max((after - unit_phase(-alpha.radians()) * before).norm())
            .max((after.norm() - before.norm()).abs());

        let (x, p) = (rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let (xr, pr) = rotate_xp(x, p, alpha, &params);
        worst_xp = worst_xp
            .max((classical_energy(xr, pr, &params) - classical_energy(x, p, &params)).abs());
    }
    let passed = worst_inv < INVARIANT_TOL && worst_rot < ROTATION_TOL && worst_xp < ROTATION_TOL;
    Ok(CriterionOutcome::new("9", "phase-symmetry", passed, worst_inv, INVARIANT_TOL,
        format!("100 random states; <a> rotation err {worst_rot:.3e}, x-p energy err {worst_xp:.3e} (tol 1e-12)")))
}

/// Classical fourth-order Runge–Kutta for i ħ dc/dt = H c with a dense H.
/// Kept deliberately naive as an oracle independent of the diagonal-phase
/// propagator.
pub fn rk4_evolve(
    hamiltonian: &Operator,
    hbar: f64,
    initial: &StateVector,
    t: f64,
    step: f64,
) -> StateVector {
    let steps = (t / step).round().max(1.0) as usize;
    let h = t / steps as f64;
    let generator = hamiltonian
        .matrix()
        .mapv(|e| e * Complex64::new(0.0, -1.0 / hbar));
    let rhs = |c: &ndarray::Array1<Complex64>| generator.dot(c);
    let mut c = initial.coeffs().clone();
    for _ in 0..steps {
        let k1 = rhs(&c);
        let k2 = rhs(&(&c + &k1.mapv(|v| v * (h / 2.0))));
        let k3 = rhs(&(&c + &k2.mapv(|v| v * (h / 2.0))));
        let k4 = rhs(&(&c + &k3.mapv(|v| v * h)));
        c = &c
            + &((&k1 + &k2.mapv(|v| v * 2.0) + &k3.mapv(|v| v * 2.0) + &k4)
                .mapv(|v| v * (h / 6.0)));
    }
    StateVector::new(c, initial.time() + t).expect("non-empty")
}

/// 10: the RK4 oracle reproduces the exact propagator over one period.
pub fn rk4_oracle() -> Result<CriterionOutcome> {
    const TOL: f64 = 1e-7;
    let params = unit();
    let chi = CoherentLabel::new(1.0, 0.0);
    let n_max = auto_n_max(chi, AUTO_TAIL_TOLERANCE)?;
    let initial = coherent_coefficients(chi, n_max);
    let period = params.period();
    let exact = propagate_fock(&initial, period, &params);
    let integrated = rk4_evolve(
        &make_hamiltonian(&params, n_max),
        params.hbar(),
        &initial,
        period,
        1e-4,
    );
    let worst = exact
        .coeffs()
        .iter()
        .zip(integrated.coeffs())
        .map(|(e, r)| (e - r).norm())
        .fold(0.0, f64::max);
    Ok(CriterionOutcome::new(
        "10",
        "rk4-oracle",
        worst < TOL,
        worst,
        TOL,
        format!("chi = 1, n_max = {n_max}, step 1e-4 over one period"),
    ))
}

/// Truncation adequacy of a user-chosen (χ, n_max): the Poisson tail beyond
/// the cutoff must be below the automatic-rule tolerance.
pub fn truncation_probe(chi: CoherentLabel, n_max: usize) -> CriterionOutcome {
    let tail = truncation_tail(chi, n_max);
    CriterionOutcome::new(
        "T",
        "truncation",
        tail < AUTO_TAIL_TOLERANCE,
        tail,
        AUTO_TAIL_TOLERANCE,
        format!("chi = {}, n_max = {n_max}", chi.chi()),
    )
}

type Check<'a> = (
    &'static str,
    &'static str,
    Box<dyn Fn() -> Result<CriterionOutcome> + 'a>,
);

/// Runs every criterion in order. Internal errors become failed outcomes.
pub fn run_all(config: &VerifyConfig) -> Vec<CriterionOutcome> {
    let checks: Vec<Check> = vec![
        ("1", "minimal-uncertainty", Box::new(minimal_uncertainty)),
        ("2", "fock-uncertainty", Box::new(fock_uncertainty)),
        ("3", "anomalous-averages", Box::new(anomalous_averages)),
        ("4", "ehrenfest", Box::new(ehrenfest)),
        ("5", "energy-constancy", Box::new(energy_constancy)),
        ("6", "wave-packet", Box::new(wave_packet)),
        (
            "7",
            "generating-function",
            Box::new(move || Ok(generating_function(config.seed))),
        ),
        (
            "8",
            "annihilation-eigenstate",
            Box::new(annihilation_eigenstate),
        ),
        (
            "9",
            "phase-symmetry",
            Box::new(move || phase_symmetry(config.seed)),
        ),
        ("10", "rk4-oracle", Box::new(rk4_oracle)),
    ];
    let mut outcomes: Vec<CriterionOutcome> = checks
        .into_iter()
        .map(|(id, name, check)| {
            check().unwrap_or_else(|e| {
                CriterionOutcome::new(id, name, false, f64::NAN, f64::NAN, format!("error: {e}"))
            })
        })
        .collect();
    if let Some((chi, n_max)) = config.probe {
        outcomes.push(truncation_probe(chi, n_max));
    }
    outcomes
}
