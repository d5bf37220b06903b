use std::f64::consts::PI;
use std::io::Write;
use std::process::{Command, Output};

use rice_cli::record::RunRecord;
use rice_oracle::{density_oracle, exact_moments};

fn rice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rice-maxima"))
        .args(args)
        .env_remove("RICE_MAXIMA_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (RunRecord, String) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = rice(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let rec: RunRecord = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (rec, text)
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn density_matches_double_integral() {
    let (rec, _) = json(&["density", "--n", "3", "--u", "inf", "--x", "1"]);
    let form = exact_moments(0.0, &[1.0; 3], 1.0).quadratic_form();
    let want = density_oracle(&form, f64::INFINITY);
    let got = rec.results[0].value;
    assert!(((got - want) / want).abs() < 1e-8, "{got} vs {want}");
    assert_eq!(rec.results[0].method, "exact");
}

#[test]
fn density_of_a_quadratic_is_degenerate() {
    let out = rice(&["density", "--n", "2", "--u", "0", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("degenerate covariance"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn density_below_minus_infinity_is_zero() {
    let (rec, _) = json(&["density", "--n", "3", "--u", "-inf", "--x", "1"]);
    assert_eq!(rec.results[0].value, 0.0);
}

#[test]
fn expect_reports_an_error_estimate() {
    let (rec, _) = json(&["expect", "--n", "5", "--u", "0.5", "--interval", "-2,inf"]);
    let r = &rec.results[0];
    assert!(r.value > 0.0 && r.abs_error.unwrap() < 1e-6);
    assert_eq!(r.stderr, None);
    let q = rec.query.unwrap();
    assert_eq!((q.interval[0].0, q.interval[1].0), (-2.0, f64::INFINITY));
}

#[test]
fn bad_tolerance_and_interval_are_usage_errors() {
    assert_eq!(
        rice(&["expect", "--n", "5", "--u", "0", "--rel-tol", "0.5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rice(&["expect", "--n", "5", "--u", "0", "--interval", "3,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rice(&["expect", "--n", "5", "--u", "0", "--interval", "sideways"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rice(&["expect", "--n", "2", "--u", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn tail_constant_is_assembled_from_integrals() {
    let (rec, _) = json(&["asymptotic", "--family", "1", "--n", "10000", "--u", "1"]);
    let t = rec.terms.unwrap();
    let i1 = rice_asymptotics::h_integral(1, rice_asymptotics::Selector::First)
        .unwrap()
        .value;
    let i13 = rice_asymptotics::h_integral(1, rice_asymptotics::Selector::FirstThird)
        .unwrap()
        .value;
    assert!((t.constant - (i1 - i13) / (4.0 * PI)).abs() < 1e-15);
    assert_eq!(t.log_coefficient, 0.0);
    assert!((rec.results[0].value - (t.constant + t.u_term)).abs() < 1e-18);
}

#[test]
fn neg_unit_log_coefficient() {
    let (rec, _) = json(&[
        "asymptotic",
        "--family",
        "neg-unit",
        "--n",
        "10000",
        "--u",
        "1",
    ]);
    let want = 2.0 * (3f64.sqrt() - 1.0) / (11.0 * PI);
    assert!((rec.terms.unwrap().log_coefficient - want).abs() < 1e-15);
    assert!(rec.warnings.is_empty());
}

#[test]
fn level_beyond_validity_warns_but_prints() {
    let out = rice(&[
        "asymptotic",
        "--family",
        "neg-tail",
        "--n",
        "16",
        "--u",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    assert!(!out.stdout.is_empty());
}

#[test]
fn asymptotics_reject_general_models() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "1\n2\n1").unwrap();
    let path = f.path().to_str().unwrap();
    let out = rice(&[
        "asymptotic",
        "--family",
        "1",
        "--n",
        "3",
        "--u",
        "1",
        "--sigma-file",
        path,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sigma_file_scales_the_level() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# doubled\n2\n2\n2\n2").unwrap();
    let path = f.path().to_str().unwrap();
    let (scaled, _) = json(&["expect", "--n", "4", "--u", "1.4", "--sigma-file", path]);
    let (unit, _) = json(&["expect", "--n", "4", "--u", "0.7"]);
    let (a, b) = (scaled.results[0].value, unit.results[0].value);
    assert!(((a - b) / b).abs() < 1e-8, "{a} vs {b}");
    assert_eq!(scaled.model.unwrap().sigma, path);
    let out = rice(&["expect", "--n", "5", "--u", "0", "--sigma-file", path]);
    assert_eq!(out.status.code(), Some(2));
    let out = rice(&[
        "expect",
        "--n",
        "4",
        "--u",
        "0",
        "--sigma-file",
        "/nonexistent/sigma",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn montecarlo_is_reproducible_across_thread_counts() {
    let args = [
        "--json",
        "montecarlo",
        "--n",
        "5",
        "--u",
        "0.5",
        "--trials",
        "3000",
        "--seed",
        "9",
        "--workers",
        "1",
    ];
    let a = rice(&args).stdout;
    let b = rice(&args).stdout;
    let c = Command::new(env!("CARGO_BIN_EXE_rice-maxima"))
        .args(args)
        .env("RICE_MAXIMA_THREADS", "4")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
    let rec: RunRecord = serde_json::from_slice(&a).unwrap();
    assert_eq!(rec.results[0].trials, Some(3000));
    assert_eq!(rec.results[0].seed, Some(9));
    let bad = Command::new(env!("CARGO_BIN_EXE_rice-maxima"))
        .args(args)
        .env("RICE_MAXIMA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_constants_rows() {
    let out = rice(&["--json", "verify-constants"]);
    let rec: RunRecord = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec.constants.len(), 28);
    for row in &rec.constants {
        assert_eq!(row.diff, row.computed - row.tabulated);
        assert_eq!(row.pass, row.diff.abs() <= row.tolerance);
    }
    let all_pass = rec.constants.iter().all(|r| r.pass);
    assert_eq!(out.status.code(), Some(if all_pass { 0 } else { 4 }));
    // Nothing is tabulated to sixteen digits.
    assert_eq!(
        rice(&["verify-constants", "--rel-tol", "1e-15"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn compare_needs_degrees() {
    let out = rice(&["compare", "--n-list"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--n-list"));
    let out = rice(&["compare", "--n-list", ""]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compare_csv_and_small_degree_agreement() {
    let out = rice(&[
        "compare",
        "--n-list",
        "4,6",
        "--u-list",
        "0,1,inf",
        "--trials",
        "20000",
        "--workers",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,u,exact,exact_err,asymptotic,mc_mean,mc_stderr")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    let mut outside = 0;
    for r in &rows {
        let (exact, mean, se): (f64, f64, f64) = (
            r[2].parse().unwrap(),
            r[5].parse().unwrap(),
            r[6].parse().unwrap(),
        );
        assert_eq!(r[4], "");
        if (exact - mean).abs() > 3.0 * se {
            outside += 1;
        }
    }
    assert!(outside <= 1, "{text}");
}

#[test]
fn compare_gap_shrinks_on_the_negative_tail() {
    let (rec, _) = json(&[
        "compare",
        "--n-list",
        "200,500,1000",
        "--u-list",
        "1",
        "--interval",
        "neg-tail",
    ]);
    let gaps: Vec<f64> = rec
        .cells
        .iter()
        .map(|c| (c.exact.unwrap() - c.asymptotic.unwrap()).abs())
        .collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
}

#[test]
fn json_is_identical_across_runs_and_round_trips() {
    let args = ["asymptotic", "--family", "unit", "--n", "400", "--u", "2"];
    let (rec, text) = json(&args);
    let (_, again) = json(&args);
    assert_eq!(text, again);
    assert_eq!(rec.to_json(), text.trim_end());
    let back: RunRecord = serde_json::from_str(&rec.to_json()).unwrap();
    assert_eq!(back, rec);
}

#[test]
fn timing_is_opt_in() {
    let (rec, _) = json(&["density", "--n", "3", "--u", "0", "--x", "0.5"]);
    assert_eq!(rec.wall_time_s, None);
    let (rec, _) = json(&["--timing", "density", "--n", "3", "--u", "0", "--x", "0.5"]);
    assert!(rec.wall_time_s.unwrap() >= 0.0);
}

#[test]
fn help_and_unknown_commands() {
    assert_eq!(rice(&["--help"]).status.code(), Some(0));
    assert_eq!(rice(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(rice(&["density", "--n", "3"]).status.code(), Some(1));
}

#[test]
fn every_command_matches_the_schema() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/run_record.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let runs: [&[&str]; 7] = [
        &["density", "--n", "3", "--u", "inf", "--x", "1"],
        &["expect", "--n", "4", "--u", "-0.5", "--interval", "unit"],
        &["asymptotic", "--family", "unit", "--n", "100", "--u", "1"],
        &["montecarlo", "--n", "4", "--u", "inf", "--trials", "50"],
        &["verify-constants"],
        &[
            "compare", "--n-list", "3", "--u-list", "0,inf", "--trials", "20",
        ],
        &["--timing", "expect", "--n", "3", "--u", "0"],
    ];
    for args in runs {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let out = rice(&full);
        let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let errors: Vec<String> = validator
            .iter_errors(&value)
            .map(|e| e.to_string())
            .collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}
