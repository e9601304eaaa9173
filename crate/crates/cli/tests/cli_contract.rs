//! CLI surface contract: exit codes, deterministic byte-identical CSV,
//! refusal markers, and the presentational SVG mode.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diamond-entropy"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn invalid_flags_exit_2_with_reason() {
    let out = run(&["scan", "--l-min", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("l >= 3"), "stderr: {err}");

    assert_eq!(run(&["corrections", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["zeta", "--l", "3"]).status.code(), Some(2));
    assert_eq!(run(&["heat", "--l", "3", "--t-min", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["entropy", "--l", "3", "--epsilon", "-0.1"]).status.code(), Some(2));
    // unknown flags are clap's domain, same exit code
    assert_eq!(run(&["scan", "--does-not-exist"]).status.code(), Some(2));
    // log-steps that cannot fit strictly increasing integers
    assert_eq!(
        run(&["scan", "--l-min", "3", "--l-max", "10", "--log-steps", "40"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn numeric_failures_exit_1() {
    // dead on a tower pole
    let out = run(&["zeta", "--l", "3", "--s", "0.815464876786,2.85960086738"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("pole"), "stderr: {err}");
}

#[test]
fn identical_flags_produce_byte_identical_csv() {
    let args = [
        "scan", "--l-min", "3", "--l-max", "500", "--log-steps", "25",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let heat = [
        "heat", "--l", "3", "--t-min", "1e-5", "--t-max", "1e-2", "--points", "9",
    ];
    let a = run(&heat);
    let b = run(&heat);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // newline discipline: \n only, no \r
    assert!(!String::from_utf8(a.stdout).unwrap().contains('\r'));
}

#[test]
fn direct_refusal_marker_below_time_floor() {
    let out = run(&[
        "heat", "--l", "3", "--t-min", "1e-12", "--t-max", "1e-9", "--points", "4",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut data_rows = 0;
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        data_rows += 1;
        // t < 1e-8 everywhere on this grid: direct refused, asymptotic populated
        assert_eq!(cells[1], "refused", "row: {line}");
        assert!(cells[2].parse::<f64>().is_ok(), "row: {line}");
    }
    assert_eq!(data_rows, 4);
}

#[test]
fn decimation_check_mode_reports_tiny_residuals() {
    let out = run(&[
        "heat", "--l", "3", "--t-min", "1e-3", "--t-max", "1", "--points", "6",
        "--check-decimation",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("t,K_scaled,identity_rhs,residual\n"));
    for line in text.lines().skip(1) {
        let resid: f64 = line.split(',').nth(3).unwrap().parse().unwrap();
        assert!(resid <= 1e-12, "row: {line}");
    }
}

#[test]
fn scan_rows_match_requested_count_and_order() {
    let out = run(&["scan", "--l-min", "3", "--l-max", "1000", "--log-steps", "40"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ls: Vec<u32> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("l,"))
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(ls.len(), 40);
    assert!(ls.windows(2).all(|w| w[0] < w[1]), "{ls:?}");
    assert_eq!(ls[0], 3);
    assert_eq!(*ls.last().unwrap(), 1000);
}

#[test]
fn corrections_verify_mode_matches_quadrature_columns() {
    let out = run(&[
        "corrections", "--l-min", "3", "--l-max", "3", "--log-steps", "1", "--n", "1",
        "--verify",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    let cells: Vec<f64> = row
        .split(',')
        .skip(2)
        .map(|c| c.parse().unwrap())
        .collect();
    let scale = cells[0].hypot(cells[1]);
    assert!((cells[0] - cells[2]).abs() <= 1e-6 * scale, "row: {row}");
    assert!((cells[1] - cells[3]).abs() <= 1e-6 * scale, "row: {row}");
}

#[test]
fn svg_outputs_are_wellformed_enough() {
    for args in [
        vec!["scan", "--l-min", "3", "--l-max", "100", "--log-steps", "10", "--format", "svg"],
        vec![
            "corrections", "--l-min", "3", "--l-max", "50", "--log-steps", "8", "--n", "1,2",
            "--format", "svg",
        ],
    ] {
        let out = run(&args);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("<svg"));
        assert!(text.trim_end().ends_with("</svg>"));
        assert!(text.contains("<polyline"));
    }
    // the scan SVG draws the dashed asymptote guide
    let out = run(&["scan", "--l-min", "3", "--l-max", "100", "--log-steps", "10", "--format", "svg"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("stroke-dasharray"));
}

#[test]
fn output_flag_writes_the_same_bytes_as_stdout() {
    let dir = std::env::temp_dir().join(format!("de-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let to_file = Command::new(env!("CARGO_BIN_EXE_diamond-entropy"))
        .args(["scan", "--l-min", "3", "--l-max", "40", "--log-steps", "12"])
        .arg("--output")
        .arg(&path)
        .output()
        .unwrap();
    assert!(to_file.status.success());
    let from_stdout = run(&["scan", "--l-min", "3", "--l-max", "40", "--log-steps", "12"]);
    assert_eq!(std::fs::read(&path).unwrap(), from_stdout.stdout);
    std::fs::remove_dir_all(&dir).ok();
}
