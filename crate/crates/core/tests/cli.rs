use std::collections::HashMap;
use std::f64::consts::{SQRT_2, TAU};
use std::process::Command as Process;

use clap::Parser;

use qho_coherent::cli::{execute, Cli, Command, CommandKind, RunConfig, RunOptions};
use qho_coherent::report::{Cell, Table};

fn options(args: &[&str]) -> RunOptions {
    let argv = std::iter::once("qho")
        .chain(std::iter::once("spectrum"))
        .chain(args.iter().copied());
    match Cli::try_parse_from(argv).unwrap().command {
        Command::Spectrum(o) => o,
        _ => unreachable!(),
    }
}

fn run(kind: CommandKind, args: &[&str]) -> qho_coherent::cli::Outcome {
    let config = RunConfig::from_options(kind, &options(args)).unwrap();
    execute(&config).unwrap()
}

fn column(table: &Table, name: &str) -> Vec<f64> {
    let idx = table
        .column(name)
        .unwrap_or_else(|| panic!("missing column {name}"));
    table
        .rows
        .iter()
        .map(|r| match &r[idx] {
            Cell::Float(v) => *v,
            Cell::Int(v) => *v as f64,
            Cell::Text(t) => panic!("text cell {t}"),
        })
        .collect()
}

fn config_value(report: &qho_coherent::report::Report, key: &str) -> Cell {
    report
        .config
        .iter()
        .find(|(k, _)| k == key)
        .unwrap()
        .1
        .clone()
}

#[test]
fn trajectory_of_vacuum() {
    let out = run(CommandKind::Trajectory, &["--chi-re", "0", "--dt", "0.5"]);
    let rows = &out.report.rows;
    for prefix in ["closed", "brute"] {
        assert!(column(rows, &format!("{prefix}_mean_x"))
            .iter()
            .all(|v| *v == 0.0));
        assert!(column(rows, &format!("{prefix}_mean_p"))
            .iter()
            .all(|v| *v == 0.0));
        assert!(column(rows, &format!("{prefix}_uncertainty"))
            .iter()
            .all(|v| (v - 0.5).abs() < 1e-15));
    }
}

#[test]
fn trajectory_returns_after_one_period() {
    let dt = format!("{}", TAU / 100.0);
    let out = run(CommandKind::Trajectory, &["--chi-re", "1", "--dt", &dt]);
    let rows = &out.report.rows;
    for prefix in ["closed", "brute"] {
        let x = column(rows, &format!("{prefix}_mean_x"));
        assert_eq!(x.len(), 101);
        assert!((x[0] - SQRT_2).abs() < 1e-9);
        assert!((x[100] - SQRT_2).abs() < 1e-9);
        let energy = column(rows, &format!("{prefix}_energy"));
        let spread = energy.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - energy.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(spread < 1e-10, "{prefix} spread {spread:e}");
    }
    let max_diff = column(&out.report.footer, "max_absdiff")[0];
    assert!(max_diff < 1e-9, "{max_diff:e}");
}

#[test]
fn spectrum_examples() {
    let out = run(CommandKind::Spectrum, &["--chi-re", "0"]);
    assert_eq!(column(&out.report.rows, "probability"), vec![1.0]);

    let out = run(
        CommandKind::Spectrum,
        &["--chi-re", "0.6", "--chi-im", "0.8"],
    );
    let probs = column(&out.report.rows, "probability");
    assert!((probs[1] - (-1f64).exp()).abs() < 1e-15);
    let tail = column(&out.report.footer, "truncation_tail")[0];
    let total: f64 = probs.iter().sum();
    assert!((total - (1.0 - tail)).abs() < 1e-12);
    assert!(column(&out.report.rows, "absdiff")
        .iter()
        .all(|d| *d < 1e-15));
}

#[test]
fn spectrum_echoes_resolved_cutoff() {
    let out = run(CommandKind::Spectrum, &["--chi-re", "2"]);
    let resolved = match config_value(&out.report, "n_max") {
        Cell::Int(n) => n as usize,
        other => panic!("{other:?}"),
    };
    assert_eq!(out.report.rows.rows.len(), resolved + 1);
    assert_eq!(
        config_value(&out.report, "n_max_requested"),
        Cell::Text("auto".into())
    );
}

#[test]
fn uncertainty_table() {
    let out = run(
        CommandKind::Uncertainty,
        &["--chi-re", "1", "--chi-im", "-1", "--n-max", "20"],
    );
    assert!(column(&out.report.rows, "absdiff")
        .iter()
        .all(|d| *d < 1e-10));
    assert!(column(&out.report.footer, "absdiff")[0] < 1e-9);
}

#[test]
fn wavefunction_footer() {
    let out = run(
        CommandKind::Wavefunction,
        &[
            "--chi-re", "1.2", "--chi-im", "-0.7", "--t-end", "3", "--dt", "0.75",
        ],
    );
    let footer = &out.report.footer;
    assert_eq!(footer.rows.len(), 5);
    for v in column(footer, "variance") {
        assert!((v - 0.5).abs() < 1e-8);
    }
    for n in column(footer, "norm") {
        assert!((n - 1.0).abs() < 1e-8);
    }
    assert!(column(footer, "max_absdiff").iter().all(|d| *d < 1e-8));
    assert!(column(footer, "max_form_absdiff")
        .iter()
        .all(|d| *d < 1e-12));
    assert_eq!(out.report.rows.rows.len(), 5 * 2001);
}

#[test]
fn wavefunction_default_config() {
    let out = run(CommandKind::Wavefunction, &[]);
    let footer = &out.report.footer;
    assert!(column(footer, "max_absdiff").iter().all(|d| *d < 1e-8));
    assert!(column(footer, "variance")
        .iter()
        .all(|v| (v - 0.5).abs() < 1e-8));
    assert!(column(footer, "norm")
        .iter()
        .all(|n| (n - 1.0).abs() < 1e-8));
}

#[test]
fn symmetry_check_signature() {
    let out = run(
        CommandKind::SymmetryCheck,
        &["--chi-re", "0.5", "--chi-im", "1.0"],
    );
    let footer = &out.report.footer;
    assert_eq!(column(footer, "symmetry_broken"), vec![1.0]);
    assert!(column(footer, "max_a_rot_err")[0] < 1e-12);
    assert!(column(footer, "max_invariant_err")[0] < 1e-10);
    assert!(column(footer, "max_classical_energy_err")[0] < 1e-12);
    assert!(column(&out.report.rows, "fock_a_abs_rot")
        .iter()
        .all(|v| *v == 0.0));

    let out = run(CommandKind::SymmetryCheck, &["--chi-re", "0"]);
    assert_eq!(column(&out.report.footer, "symmetry_broken"), vec![0.0]);
}

#[test]
fn verify_default_passes() {
    let out = run(CommandKind::Verify, &[]);
    assert!(out.failures.is_empty(), "{:?}", out.failures);
    assert_eq!(out.summary.len(), 11);
}

#[test]
fn verify_names_truncation_failure() {
    let out = run(CommandKind::Verify, &["--chi-re", "3", "--n-max", "4"]);
    assert_eq!(out.failures, vec!["T truncation".to_string()]);
}

#[test]
fn json_report_shape() {
    let config =
        RunConfig::from_options(CommandKind::Spectrum, &options(&["--format", "json"])).unwrap();
    let v = execute(&config).unwrap().report.to_json();
    assert_eq!(v["config"]["command"], "spectrum");
    assert!(v["rows"].as_array().unwrap().len() > 1);
    assert!(v["footer"][0]["truncation_tail"].as_f64().unwrap() < 1e-12);
    let text = serde_json::to_string(&v["config"]["chi_re"]).unwrap();
    assert_eq!(text.split('e').next().unwrap(), "1.0000000000000000");
}

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_qho"))
}

fn read_csv(path: &std::path::Path) -> (Vec<String>, Vec<HashMap<String, String>>) {
    let text = std::fs::read_to_string(path).unwrap();
    let comments: Vec<String> = text
        .lines()
        .filter(|l| l.starts_with("# "))
        .map(str::to_owned)
        .collect();
    let body: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let rows = reader
        .records()
        .map(|r| {
            headers
                .iter()
                .map(str::to_owned)
                .zip(r.unwrap().iter().map(str::to_owned))
                .collect()
        })
        .collect();
    (comments, rows)
}

#[test]
fn binary_writes_files_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");
    for path in [&first, &second] {
        let status = bin()
            .args([
                "trajectory",
                "--chi-re",
                "0.3",
                "--chi-im",
                "-1.1",
                "--t-end",
                "2",
                "--dt",
                "0.25",
                "-o",
            ])
            .arg(path)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    let a = std::fs::read(&first).unwrap();
    assert_eq!(a, std::fs::read(&second).unwrap());

    let (comments, rows) = read_csv(&first);
    assert_eq!(comments[0], "# qho-coherent trajectory schema=1");
    assert!(comments.iter().any(|c| c.starts_with("# n_max=")));
    assert_eq!(rows.len(), 9);
    let cell = &rows[3]["brute_mean_x"];
    let mantissa = cell.trim_start_matches('-').split('e').next().unwrap();
    assert_eq!(mantissa.chars().filter(|c| c.is_ascii_digit()).count(), 17);
}

#[test]
fn binary_verify_seed_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = bin()
            .args(["verify", "--seed", "42", "--format", "json", "-o"])
            .arg(&path)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    assert_eq!(run("1.json"), run("2.json"));
}

#[test]
fn binary_output_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    let status = bin()
        .env(qho_coherent::cli::OUTPUT_DIR_ENV, dir.path())
        .args(["spectrum", "-o", "spectrum.csv"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(dir.path().join("spectrum.csv").exists());
}

#[test]
fn binary_exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["spectrum", "--grid-points", "8"]), Some(1));
    assert_eq!(code(&["spectrum", "--dt", "-1"]), Some(1));
    assert_eq!(code(&["spectrum", "--bogus"]), Some(1));
    assert_eq!(
        code(&["spectrum", "-o", "/nonexistent-dir/out.csv"]),
        Some(2)
    );
    assert_eq!(code(&["--help"]), Some(0));

    let out = bin()
        .args(["verify", "--chi-re", "3", "--n-max", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("truncation"), "{stderr}");
}
