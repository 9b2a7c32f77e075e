//! End-to-end checks of the `arclength` binary.

use std::process::{Command, Output};

use projectile_arclength::sweep::{read_sweep_csv, read_trajectory_csv};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arclength")).args(args).output().expect("spawn arclength")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn optimal_report() {
    let text = stdout(&["optimal"]);
    let value =
        |key: &str| -> f64 { text.lines().find_map(|l| l.strip_prefix(&format!("{key},"))).unwrap().parse().unwrap() };
    assert!((value("theta_rad") - 0.9855).abs() <= 1e-4);
    assert!((value("theta_deg") - 56.47).abs() <= 0.01);
    assert!((value("max_length") - 1.199_678_64).abs() <= 1e-7);
    assert!(value("gap_percent") > 4.5);
}

#[test]
fn arclength_in_degrees_and_scaled() {
    let rows = read_sweep_csv(stdout(&["arclength", "--theta", "45", "--degrees"]).as_bytes()).unwrap();
    assert!((rows[0].theta - 45.0).abs() < 1e-12);
    assert!((rows[0].arc_length - 1.147_793_57).abs() < 1e-8);

    let rows = read_sweep_csv(stdout(&["--v", "2", "--g", "4", "arclength", "--theta", "0.3"]).as_bytes()).unwrap();
    assert!((rows[0].arc_length - 0.573_522_448_120_572_8).abs() < 1e-14);

    let rows = read_sweep_csv(stdout(&["arclength", "--theta", "90", "--degrees"]).as_bytes()).unwrap();
    assert!((rows[0].arc_length - 1.0).abs() < 1e-10);
    assert_eq!(rows[0].arc_length_derivative, None);
}

#[test]
fn sweep_default_range_ends_at_vertical() {
    let rows = read_sweep_csv(stdout(&["sweep", "--steps", "11"]).as_bytes()).unwrap();
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[10].theta, std::f64::consts::FRAC_PI_2);
    assert!(rows[10].arc_length_derivative.is_none());
}

#[test]
fn trajectory_family_by_default() {
    let samples = read_trajectory_csv(stdout(&["trajectory", "--samples", "5"]).as_bytes()).unwrap();
    assert_eq!(samples.len(), 25);
    let thetas = stdout(&["trajectory", "--samples", "2", "--theta", "30", "--theta", "60", "--degrees"]);
    let s = read_trajectory_csv(thetas.as_bytes()).unwrap();
    assert_eq!(s.len(), 4);
    assert!((s[2].theta - 60.0).abs() < 1e-12);
}

#[test]
fn output_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&["sweep", "--min", "0.1", "--max", "1.5", "--steps", "200", "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert!(!a.contains(&b'\r'));
}

#[test]
fn verify_passes() {
    let text = stdout(&["verify"]);
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn domain_errors_exit_with_one() {
    for args in [
        &["arclength", "--theta", "0"][..],
        &["arclength", "--theta", "91", "--degrees"],
        &["--v", "-1", "optimal"],
        &["sweep", "--min", "1.0", "--max", "0.5"],
        &["trajectory", "--samples", "1"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
