use std::process::{Command, Output};

use serde_json::Value;

fn bathlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bathlab")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = bathlab(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn csv(args: &[&str]) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = stdout(args);
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn density_shift_grid_and_zero_frequency_values() {
    let (header, rows) = csv(&["density-shift", "--omega-d", "5", "--points", "3", "--omega-max", "1"]);
    assert_eq!(header, ["omega", "delta_rho"]);
    let omegas: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(omegas, [0.0, 0.5, 1.0]);
    assert!((rows[0][1] - 0.2546479).abs() < 1e-7);

    let (_, rows) = csv(&["density-shift", "--omega-d", "0.1", "--points", "2"]);
    assert!((rows[0][1] + 2.8647890).abs() < 1e-7);
    let (_, rows) = csv(&["density-shift", "--omega-d", "1", "--points", "2"]);
    assert_eq!(rows[0][1], 0.0);
}

#[test]
fn decomposition_columns() {
    let (header, rows) = csv(&["density-shift", "--omega-d", "5", "--decompose", "--points", "11"]);
    assert_eq!(header, ["omega", "delta_rho", "lor1", "lor2", "lor3"]);
    for r in rows {
        assert!((r[2] + r[3] + r[4] - r[1]).abs() < 1e-8);
    }
}

#[test]
fn default_grid_has_500_points_to_ten() {
    let (_, rows) = csv(&["density-shift", "--omega-d", "2"]);
    assert_eq!(rows.len(), 500);
    assert_eq!(rows.last().unwrap()[0], 10.0);
}

#[test]
fn heat_asymptotic_is_linear() {
    let (header, rows) = csv(&[
        "heat", "--omega-d", "0.1", "--t-min", "0.001", "--t-max", "0.01", "--points", "2", "--method", "asymptotic",
    ]);
    assert_eq!(header, ["T", "C"]);
    assert_eq!(rows.len(), 2);
    for r in rows {
        assert!((r[1] / r[0] + 9.4247780).abs() < 1e-6);
    }
}

#[test]
fn heat_methods_agree() {
    let base = ["heat", "--omega-d", "0.1", "--t-min", "0.01", "--t-max", "100", "--points", "25", "--log"];
    let (_, closed) = csv(&base);
    let (_, quad) = csv(&[&base[..], &["--method", "quadrature"]].concat());
    for (a, b) in closed.iter().zip(&quad) {
        assert_eq!(a[0], b[0]);
        assert!((a[1] - b[1]).abs() < 1e-6);
    }
}

#[test]
fn invalid_grid_exits_two() {
    let out = bathlab(&["heat", "--omega-d", "5", "--t-min", "100", "--t-max", "100", "--points", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    for args in [
        &["heat", "--omega-d", "0", "--t-min", "1", "--t-max", "2"][..],
        &["heat", "--omega-d", "1", "--points", "1"],
        &["density-shift", "--omega-d", "1", "--points", "1"],
        &["oracle", "--temps", "1,-2"],
        &["anomaly"],
        &["heat", "--omega-d", "1", "--method", "magic"],
        &["frobnicate"],
    ] {
        assert_eq!(bathlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn zero_point_energy_and_cold_limit() {
    let v = json(&["energy", "--omega-d", "5", "--zero-point"]);
    let u0 = v["u0"].as_f64().unwrap();
    assert!((u0 - 0.469120722).abs() < 1e-9);

    let (header, rows) = csv(&["energy", "--omega-d", "5", "--t-min", "0.001", "--t-max", "0.01", "--points", "2"]);
    assert_eq!(header, ["T", "U"]);
    assert!((rows[0][1] - u0).abs() < 1e-3);

    let v = json(&["energy", "--omega-d", "0.1", "--zero-point"]);
    assert!(v["u0"].as_f64().unwrap().is_finite());
}

#[test]
fn anomaly_reports() {
    let cases = [
        ("0.1", -10.0, 10.0, true, -9.4247780),
        ("5", -0.2, 0.2, false, 0.8377580),
        ("1", -1.0, 1.0, false, 0.0),
    ];
    for (wd, slope, mass, negative, low_t) in cases {
        let v = json(&["anomaly", "--omega-d", wd]);
        assert!((v["gamma_hat_prime_zero"].as_f64().unwrap() - slope).abs() < 1e-7);
        assert!((v["missing_mass_ratio"].as_f64().unwrap() - mass).abs() < 1e-7);
        assert_eq!(v["low_t_negative"].as_bool(), Some(negative));
        assert!((v["low_t_slope"].as_f64().unwrap() - low_t).abs() < 1e-7);
    }
}

#[test]
fn oracle_table_and_summary() {
    let out = bathlab(&["oracle", "--omega-d", "1", "--temps", "1", "--n-modes", "2500"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("T,C_discrete,C_continuum,rel_err"));
    let row: Vec<f64> = lines.next().unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(row[0], 1.0);
    assert!(row[3] <= 0.02);
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(summary["interlacing_ok"], Value::Bool(true));
    assert!(summary["max_secular_residual"].as_f64().unwrap() <= 1e-8);
    assert!(summary["runtime_seconds"].as_f64().is_some());
}

#[test]
fn oracle_single_oscillator() {
    // Strict Ohmic discretisation gives m₁ = 2Δ/(πω₁²) = 1 for Δ = ω₁ = 2/π.
    let delta = (2.0 / std::f64::consts::PI).to_string();
    let (header, rows) = csv(&["oracle", "--strict-ohmic", "--n-modes", "1", "--delta", &delta, "--spectrum"]);
    assert_eq!(header, ["k", "omega_bath", "omega_coupled", "mass"]);
    assert!((rows[0][3] - 1.0).abs() < 1e-8);
    assert!((rows[0][2] / rows[0][1] - 2f64.sqrt()).abs() < 1e-8);
}

#[test]
fn output_is_deterministic() {
    let args = ["heat", "--omega-d", "0.5", "--t-min", "0.1", "--t-max", "3", "--points", "7"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert!(a.ends_with('\n') && !a.contains('\r'));
    assert!(a.lines().nth(1).unwrap().starts_with("1.00000000e-1,"));
}

#[test]
fn json_carries_the_same_numbers() {
    let args = ["heat", "--omega-d", "0.5", "--t-min", "0.1", "--t-max", "3", "--points", "7"];
    let (header, rows) = csv(&args);
    let v = json(&[&args[..], &["--format", "json"]].concat());
    let columns: Vec<&str> = v["columns"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(columns, header);
    let json_rows = v["rows"].as_array().unwrap();
    for (r, j) in rows.iter().zip(json_rows) {
        let j: Vec<f64> = j.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        assert_eq!(r, &j);
    }

    let text = stdout(&["anomaly", "--omega-d", "5", "--format", "csv"]);
    assert_eq!(
        text.lines().next(),
        Some("gamma_hat_prime_zero,missing_mass_ratio,low_t_negative,low_t_slope")
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shift.csv");
    let path_str = path.to_str().unwrap();
    let printed = stdout(&["density-shift", "--omega-d", "5", "--points", "4", "--out", path_str]);
    assert!(printed.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        stdout(&["density-shift", "--omega-d", "5", "--points", "4"])
    );
}
