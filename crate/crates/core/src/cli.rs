//! Command-line front end: one subcommand per experiment, each writing a
//! [`Report`] as CSV or JSON.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 I/O failure,
//! 3 acceptance failure (`verify` only).

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coherent::{
    auto_n_max, coherent_coefficients, dynamical_coherent_state, occupation_probability,
    truncation_tail, CoherentLabel, AUTO_TAIL_TOLERANCE,
};
use crate::error::Error;
use crate::fock::{expectation, fock_state, make_hamiltonian, make_number};
use crate::observables::{averages_closedform, uncertainty_fock, BruteForce, ObservableRecord};
use crate::params::OscillatorParams;
use crate::report::{Cell, Report, Table};
use crate::symmetry::{
    classical_energy, ladder_average, propagate_fock, rotate_xp, transform_state_phase, PhaseAngle,
};
use crate::verify::{self, VerifyConfig};
use crate::wavefunction::{packet_moments, psi_closed, series_on_grid, ClosedForm, SpatialGrid};

/// Relative output paths are resolved against this directory when set.
pub const OUTPUT_DIR_ENV: &str = "QHO_OUTPUT_DIR";

/// Tail tolerance for "auto" cutoffs in the wavefunction command. Amplitude
/// errors scale with the square root of the tail.
pub const WAVEFUNCTION_TAIL_TOLERANCE: f64 = AUTO_TAIL_TOLERANCE * AUTO_TAIL_TOLERANCE;

/// Number of phase angles sampled by `symmetry-check`.
const SYMMETRY_ANGLES: usize = 16;

#[derive(Debug, Parser)]
#[command(
    name = "qho",
    version,
    about = "Coherent-state experiments on the truncated harmonic oscillator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form and brute-force averages over time, with their differences.
    Trajectory(RunOptions),
    /// Occupation probabilities of the coherent state against the Poisson law.
    Spectrum(RunOptions),
    /// Uncertainty products of Fock levels and of the coherent state.
    Uncertainty(RunOptions),
    /// Position-space packet: truncated series against the closed forms.
    Wavefunction(RunOptions),
    /// Phase-transformation invariants and the broken-symmetry signature.
    SymmetryCheck(RunOptions),
    /// Run the acceptance suite; exit 3 if any criterion fails.
    Verify(RunOptions),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandKind {
    Trajectory,
    Spectrum,
    Uncertainty,
    Wavefunction,
    SymmetryCheck,
    Verify,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Trajectory => "trajectory",
            CommandKind::Spectrum => "spectrum",
            CommandKind::Uncertainty => "uncertainty",
            CommandKind::Wavefunction => "wavefunction",
            CommandKind::SymmetryCheck => "symmetry-check",
            CommandKind::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Truncation level: a fixed number or resolved from the tail rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NMax {
    #[default]
    Auto,
    Fixed(usize),
}

impl FromStr for NMax {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(NMax::Auto);
        }
        s.parse::<usize>()
            .map(NMax::Fixed)
            .map_err(|_| format!("expected a nonnegative integer or \"auto\", got {s:?}"))
    }
}

impl fmt::Display for NMax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NMax::Auto => f.write_str("auto"),
            NMax::Fixed(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunOptions {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub chi_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub chi_im: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// Cutoff level, or "auto" for the smallest level with tail below 1e-12.
    #[arg(long, default_value = "auto")]
    pub n_max: NMax,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t_start: f64,
    #[arg(long, default_value_t = std::f64::consts::TAU, allow_negative_numbers = true)]
    pub t_end: f64,
    #[arg(long, default_value_t = 0.1)]
    pub dt: f64,
    /// Half-width of the position grid in oscillator lengths.
    #[arg(long, default_value_t = 10.0)]
    pub grid_halfwidth: f64,
    #[arg(long, default_value_t = 2001)]
    pub grid_points: usize,
    /// Output file; "-" writes to standard output.
    #[arg(long, short = 'o', default_value = "-")]
    pub output_path: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    pub seed: u64,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub chi: CoherentLabel,
    pub params: OscillatorParams,
    pub n_max: NMax,
    pub t_start: f64,
    pub t_end: f64,
    pub dt: f64,
    pub grid_halfwidth: f64,
    pub grid_points: usize,
    pub output_path: String,
    pub format: Format,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Library(#[from] Error),
    #[error("acceptance failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
            CliError::Library(Error::Io(_)) => 2,
            CliError::Library(Error::Csv(e)) if e.is_io_error() => 2,
            CliError::Library(Error::Json(e)) if e.is_io() => 2,
            CliError::Library(_) => 1,
            CliError::Verification(_) => 3,
        }
    }
}

impl RunConfig {
    pub fn from_options(command: CommandKind, o: &RunOptions) -> Result<Self, CliError> {
        let params = OscillatorParams::new(o.hbar, o.mass, o.omega)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let chi = CoherentLabel::try_new(num_complex::Complex64::new(o.chi_re, o.chi_im))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let config = Self {
            command,
            chi,
            params,
            n_max: o.n_max,
            t_start: o.t_start,
            t_end: o.t_end,
            dt: o.dt,
            grid_halfwidth: o.grid_halfwidth,
            grid_points: o.grid_points,
            output_path: o.output_path.clone(),
            format: o.format,
            seed: o.seed,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |msg: String| Err(CliError::Usage(msg));
        if !(self.t_start.is_finite() && self.t_end.is_finite()) || self.t_end < self.t_start {
            return usage(format!(
                "need finite t_end >= t_start, got {} .. {}",
                self.t_start, self.t_end
            ));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return usage(format!("dt must be positive, got {}", self.dt));
        }
        if self.grid_points < 3 || self.grid_points.is_multiple_of(2) {
            return usage(format!(
                "grid_points must be odd and at least 3, got {}",
                self.grid_points
            ));
        }
        if !(self.grid_halfwidth > 0.0 && self.grid_halfwidth.is_finite()) {
            return usage(format!(
                "grid_halfwidth must be positive, got {}",
                self.grid_halfwidth
            ));
        }
        Ok(())
    }

    /// Sample times t_start, t_start + dt, .. up to t_end.
    pub fn times(&self) -> Vec<f64> {
        let count = ((self.t_end - self.t_start) / self.dt + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|k| self.t_start + self.dt * k as f64)
            .collect()
    }

    /// Resolves "auto" with the given tail tolerance.
    pub fn resolve_n_max(&self, tolerance: f64) -> Result<usize, CliError> {
        match self.n_max {
            NMax::Fixed(n) => Ok(n),
            NMax::Auto => {
                auto_n_max(self.chi, tolerance).map_err(|e| CliError::Usage(e.to_string()))
            }
        }
    }

    fn echo(&self, resolved_n_max: usize) -> Vec<(String, Cell)> {
        let chi = self.chi.chi();
        vec![
            ("chi_re".into(), Cell::from(chi.re)),
            ("chi_im".into(), Cell::from(chi.im)),
            ("hbar".into(), Cell::from(self.params.hbar())),
            ("mass".into(), Cell::from(self.params.mass())),
            ("omega".into(), Cell::from(self.params.omega())),
            ("n_max_requested".into(), Cell::Text(self.n_max.to_string())),
            ("n_max".into(), Cell::from(resolved_n_max)),
            ("t_start".into(), Cell::from(self.t_start)),
            ("t_end".into(), Cell::from(self.t_end)),
            ("dt".into(), Cell::from(self.dt)),
            ("grid_halfwidth".into(), Cell::from(self.grid_halfwidth)),
            ("grid_points".into(), Cell::from(self.grid_points)),
            ("seed".into(), Cell::Int(self.seed as i64)),
        ]
    }

    fn report(&self, resolved_n_max: usize, rows: Table, footer: Table) -> Report {
        Report {
            command: self.command.name().into(),
            config: self.echo(resolved_n_max),
            rows,
            footer,
        }
    }
}

/// Output of a command: the report to write and whether acceptance passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub failures: Vec<String>,
    /// Human-readable PASS/FAIL lines, echoed to stderr by `verify`.
    pub summary: Vec<String>,
}

/// Builds the report for a validated configuration without touching the
/// filesystem.
pub fn execute(config: &RunConfig) -> Result<Outcome, CliError> {
    let report = match config.command {
        CommandKind::Trajectory => cmd_trajectory(config)?,
        CommandKind::Spectrum => cmd_spectrum(config)?,
        CommandKind::Uncertainty => cmd_uncertainty(config)?,
        CommandKind::Wavefunction => cmd_wavefunction(config)?,
        CommandKind::SymmetryCheck => cmd_symmetry_check(config)?,
        CommandKind::Verify => return cmd_verify(config),
    };
    Ok(Outcome {
        report,
        failures: Vec::new(),
        summary: Vec::new(),
    })
}

const RECORD_FIELDS: usize = ObservableRecord::COLUMNS.len() - 1;

/// Closed-form and brute-force averages per sample time plus their
/// columnwise absolute differences.
pub fn cmd_trajectory(config: &RunConfig) -> Result<Report, CliError> {
    let params = &config.params;
    let n_max = config.resolve_n_max(AUTO_TAIL_TOLERANCE)?;
    // two spare levels keep X² and P² exact on the state's support
    let initial = coherent_coefficients(config.chi, n_max).padded(n_max + 2)?;
    let evaluator = BruteForce::new(params, n_max + 2);
    let fields = &ObservableRecord::COLUMNS[1..];
    let mut columns = vec!["time".to_string()];
    for prefix in ["closed", "brute", "absdiff"] {
        columns.extend(fields.iter().map(|f| format!("{prefix}_{f}")));
    }
    let mut rows = Table::new(columns);
    let mut max_diff = [0.0_f64; RECORD_FIELDS];
    let (mut e_lo, mut e_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for t in config.times() {
        let closed = averages_closedform(config.chi, t, params);
        let brute = evaluator.evaluate(&propagate_fock(&initial, t, params))?;
        let diff = closed.abs_diff(&brute);
        let mut row = vec![Cell::from(t)];
        row.extend(closed.values()[1..].iter().map(|&v| Cell::from(v)));
        row.extend(brute.values()[1..].iter().map(|&v| Cell::from(v)));
        row.extend(diff[1..].iter().map(|&v| Cell::from(v)));
        rows.push(row);
        for (m, d) in max_diff.iter_mut().zip(&diff[1..]) {
            *m = m.max(*d);
        }
        e_lo = e_lo.min(brute.energy);
        e_hi = e_hi.max(brute.energy);
    }
    let mut footer = Table::new(["truncation_tail", "energy_spread", "max_absdiff"]);
    footer.push(vec![
        Cell::from(truncation_tail(config.chi, n_max)),
        Cell::from(e_hi - e_lo),
        Cell::from(max_diff.into_iter().fold(0.0, f64::max)),
    ]);
    Ok(config.report(n_max, rows, footer))
}

/// |C_n|² against the Poisson weights for n = 0..=n_max.
pub fn cmd_spectrum(config: &RunConfig) -> Result<Report, CliError> {
    let n_max = config.resolve_n_max(AUTO_TAIL_TOLERANCE)?;
    let state = coherent_coefficients(config.chi, n_max);
    let mut rows = Table::new(["n", "probability", "poisson", "absdiff"]);
    let mut total = 0.0;
    for (n, c) in state.coeffs().iter().enumerate() {
        let p = c.norm_sqr();
        let poisson = occupation_probability(config.chi, n);
        total += p;
        rows.push(vec![
            Cell::from(n),
            Cell::from(p),
            Cell::from(poisson),
            Cell::from((p - poisson).abs()),
        ]);
    }
    let tail = truncation_tail(config.chi, n_max);
    let mut footer = Table::new(["truncation_tail", "probability_sum", "one_minus_tail"]);
    footer.push(vec![
        Cell::from(tail),
        Cell::from(total),
        Cell::from(1.0 - tail),
    ]);
    Ok(config.report(n_max, rows, footer))
}

/// Brute-force I_n of each Fock level against ħ(n + 1/2), and the coherent
/// state's product at t_start against ħ/2.
pub fn cmd_uncertainty(config: &RunConfig) -> Result<Report, CliError> {
    let params = &config.params;
    let n_max = config.resolve_n_max(AUTO_TAIL_TOLERANCE)?;
    let evaluator = BruteForce::new(params, n_max + 2);
    let mut rows = Table::new(["n", "bruteforce", "exact", "absdiff"]);
    for n in 0..=n_max {
        let r = evaluator.evaluate(&fock_state(n, n_max + 2)?)?;
        let exact = uncertainty_fock(n, params);
        rows.push(vec![
            Cell::from(n),
            Cell::from(r.uncertainty),
            Cell::from(exact),
            Cell::from((r.uncertainty - exact).abs()),
        ]);
    }
    let coherent =
        dynamical_coherent_state(config.chi, config.t_start, params, n_max).padded(n_max + 2)?;
    let r = evaluator.evaluate(&coherent)?;
    let mut footer = Table::new(["time", "coherent_bruteforce", "coherent_exact", "absdiff"]);
    let half_hbar = params.hbar() / 2.0;
    footer.push(vec![
        Cell::from(config.t_start),
        Cell::from(r.uncertainty),
        Cell::from(half_hbar),
        Cell::from((r.uncertainty - half_hbar).abs()),
    ]);
    Ok(config.report(n_max, rows, footer))
}

/// Series and closed-form packet on a grid following x̄(t), per sample time.
pub fn cmd_wavefunction(config: &RunConfig) -> Result<Report, CliError> {
    let params = &config.params;
    let n_max = config.resolve_n_max(WAVEFUNCTION_TAIL_TOLERANCE)?;
    let mut rows = Table::new([
        "time",
        "x",
        "series_re",
        "series_im",
        "closed_re",
        "closed_im",
        "absdiff",
    ]);
    let mut footer = Table::new([
        "time",
        "norm",
        "mean",
        "variance",
        "expected_variance",
        "max_absdiff",
        "max_form_absdiff",
    ]);
    for t in config.times() {
        let center = averages_closedform(config.chi, t, params).mean_x;
        let grid =
            SpatialGrid::centered(center, config.grid_halfwidth, config.grid_points, params)?;
        let series = series_on_grid(config.chi, t, params, n_max, &grid);
        let mut max_diff = 0.0_f64;
        let mut max_form = 0.0_f64;
        for s in &series {
            let closed = psi_closed(config.chi, s.x, t, params, ClosedForm::ComplexCenter).value;
            let schrodinger = psi_closed(config.chi, s.x, t, params, ClosedForm::MeanPhase).value;
            let diff = (s.value - closed).norm();
            max_diff = max_diff.max(diff);
            max_form = max_form.max((closed - schrodinger).norm());
            rows.push(vec![
                Cell::from(t),
                Cell::from(s.x),
                Cell::from(s.value.re),
                Cell::from(s.value.im),
                Cell::from(closed.re),
                Cell::from(closed.im),
                Cell::from(diff),
            ]);
        }
        let m = packet_moments(&series, &grid)?;
        footer.push(vec![
            Cell::from(t),
            Cell::from(m.norm),
            Cell::from(m.mean),
            Cell::from(m.variance),
            Cell::from(params.x_scale().powi(2)),
            Cell::from(max_diff),
            Cell::from(max_form),
        ]);
    }
    Ok(config.report(n_max, rows, footer))
}

/// Averages before and after a → a·e^(iα) for evenly spaced α, on the
/// coherent state at t_start and on the Fock state |1⟩.
pub fn cmd_symmetry_check(config: &RunConfig) -> Result<Report, CliError> {
    let params = &config.params;
    let n_max = config.resolve_n_max(AUTO_TAIL_TOLERANCE)?;
    let state = dynamical_coherent_state(config.chi, config.t_start, params, n_max);
    let fock = fock_state(1, n_max.max(1))?;
    let hamiltonian = make_hamiltonian(params, n_max);
    let number = make_number(n_max);
    let means = averages_closedform(config.chi, config.t_start, params);
    let a_before = ladder_average(&state);
    let n_before = expectation(&number, &state)?.re;
    let e_before = expectation(&hamiltonian, &state)?.re;
    let classical_before = classical_energy(means.mean_x, means.mean_p, params);

    let mut rows = Table::new([
        "alpha",
        "a_re",
        "a_im",
        "a_rot_re",
        "a_rot_im",
        "a_rot_err",
        "n_avg",
        "n_avg_rot",
        "energy",
        "energy_rot",
        "fock_a_abs_rot",
        "mean_x_rot",
        "mean_p_rot",
        "classical_energy_rot",
    ]);
    let (mut worst_rot, mut worst_inv, mut worst_classical) = (0.0_f64, 0.0_f64, 0.0_f64);
    for k in 0..=SYMMETRY_ANGLES {
        let alpha = PhaseAngle::new(std::f64::consts::TAU * k as f64 / SYMMETRY_ANGLES as f64)?;
        let rotated = transform_state_phase(&state, alpha);
        let a_after = ladder_average(&rotated);
        let expected = a_before * crate::coherent::unit_phase(-alpha.radians());
        let n_after = expectation(&number, &rotated)?.re;
        let e_after = expectation(&hamiltonian, &rotated)?.re;
        let fock_after = ladder_average(&transform_state_phase(&fock, alpha)).norm();
        let (x_rot, p_rot) = rotate_xp(means.mean_x, means.mean_p, alpha, params);
        let classical_after = classical_energy(x_rot, p_rot, params);
        let rot_err = (a_after - expected).norm();
        worst_rot = worst_rot.max(rot_err);
        worst_inv = worst_inv
            .max((n_after - n_before).abs())
            .max((e_after - e_before).abs());
        worst_classical = worst_classical.max((classical_after - classical_before).abs());
        rows.push(vec![
            Cell::from(alpha.radians()),
            Cell::from(a_before.re),
            Cell::from(a_before.im),
            Cell::from(a_after.re),
            Cell::from(a_after.im),
            Cell::from(rot_err),
            Cell::from(n_before),
            Cell::from(n_after),
            Cell::from(e_before),
            Cell::from(e_after),
            Cell::from(fock_after),
            Cell::from(x_rot),
            Cell::from(p_rot),
            Cell::from(classical_after),
        ]);
    }
    let mut footer = Table::new([
        "order_parameter_abs",
        "symmetry_broken",
        "max_a_rot_err",
        "max_invariant_err",
        "max_classical_energy_err",
    ]);
    footer.push(vec![
        Cell::from(a_before.norm()),
        Cell::from(a_before.norm() > 0.0),
        Cell::from(worst_rot),
        Cell::from(worst_inv),
        Cell::from(worst_classical),
    ]);
    Ok(config.report(n_max, rows, footer))
}

/// Runs the acceptance suite, plus a truncation check of the configured
/// (χ, n_max).
pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, CliError> {
    let n_max = config.resolve_n_max(AUTO_TAIL_TOLERANCE)?;
    let outcomes = verify::run_all(&VerifyConfig {
        seed: config.seed,
        probe: Some((config.chi, n_max)),
    });
    let mut rows = Table::new(["id", "name", "passed", "measured", "threshold", "detail"]);
    let mut failures = Vec::new();
    for o in &outcomes {
        rows.push(vec![
            Cell::from(o.id),
            Cell::from(o.name),
            Cell::from(o.passed),
            Cell::from(o.measured),
            Cell::from(o.threshold),
            Cell::Text(o.detail.clone()),
        ]);
        if !o.passed {
            failures.push(format!("{} {}", o.id, o.name));
        }
    }
    let mut footer = Table::new(["criteria", "failed"]);
    footer.push(vec![Cell::from(outcomes.len()), Cell::from(failures.len())]);
    let summary = outcomes.iter().map(|o| o.line()).collect();
    Ok(Outcome {
        report: config.report(n_max, rows, footer),
        failures,
        summary,
    })
}

fn resolve_output(path: &str) -> Option<PathBuf> {
    if path == "-" {
        return None;
    }
    let path = PathBuf::from(path);
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Some(PathBuf::from(dir).join(path)),
        _ => Some(path),
    }
}

fn write_report(report: &Report, format: Format, out: impl Write) -> Result<(), CliError> {
    match format {
        Format::Csv => report.write_csv(out)?,
        Format::Json => report.write_json(out)?,
    }
    Ok(())
}

/// Runs a full invocation from parsed options and writes the output.
pub fn run_command(command: CommandKind, options: &RunOptions) -> Result<(), CliError> {
    let config = RunConfig::from_options(command, options)?;
    let outcome = execute(&config)?;
    for line in &outcome.summary {
        eprintln!("{line}");
    }
    match resolve_output(&config.output_path) {
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_report(&outcome.report, config.format, &mut lock)?;
            lock.flush()?;
        }
        Some(path) => {
            let mut file = BufWriter::new(File::create(&path)?);
            write_report(&outcome.report, config.format, &mut file)?;
            file.flush()?;
        }
    }
    if outcome.failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(outcome.failures.join(", ")))
    }
}

/// Entry point for the `qho` binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (kind, options) = match &cli.command {
        Command::Trajectory(o) => (CommandKind::Trajectory, o),
        Command::Spectrum(o) => (CommandKind::Spectrum, o),
        Command::Uncertainty(o) => (CommandKind::Uncertainty, o),
        Command::Wavefunction(o) => (CommandKind::Wavefunction, o),
        Command::SymmetryCheck(o) => (CommandKind::SymmetryCheck, o),
        Command::Verify(o) => (CommandKind::Verify, o),
    };
    match run_command(kind, options) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("qho: {e}");
            e.exit_code()
        }
    }
}
