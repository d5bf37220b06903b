//! Drivers behind the `rice-maxima` binary.

pub mod args;
pub mod error;
pub mod record;

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use rice_asymptotics::{reference_constants, theorem_expansion_for, REFERENCE_INTEGRALS};
use rice_core::{expected_count, maxima_density, CountQuery, PolynomialModel, RiceError};
use rice_montecarlo::{estimate_em_levels, MCConfig};

use args::{Command, Interval, McArgs, ModelArgs};
pub use error::CliError;
use record::{
    cells_csv, CompareCell, ConstantRow, ModelSpec, QuerySpec, Real, ResultRow, RunRecord, Terms,
};

pub const THREADS_ENV: &str = "RICE_MAXIMA_THREADS";

/// Output of a command. `failure` is set when the record is complete but the
/// run must still exit nonzero.
#[derive(Debug)]
pub struct Report {
    pub record: RunRecord,
    pub text: String,
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(record: RunRecord, text: String) -> Self {
        Report {
            record,
            text,
            failure: None,
        }
    }
}

pub fn run(command: &Command, argv: &[String]) -> Result<Report, CliError> {
    match command {
        Command::Density(a) => density(a, argv),
        Command::Expect(a) => expect(a, argv),
        Command::Asymptotic(a) => asymptotic(a, argv),
        Command::Montecarlo(a) => montecarlo(a, argv),
        Command::VerifyConstants(a) => verify_constants(a, argv),
        Command::Compare(a) => compare(a, argv),
    }
}

fn read_sigma_file(path: &Path, n: usize) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let sigma = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.parse::<f64>()
                .map_err(|e| RiceError::InvalidModel(format!("sigma file entry {l:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if sigma.len() != n {
        return Err(RiceError::InvalidModel(format!(
            "sigma file has {} values, expected n = {n}",
            sigma.len()
        ))
        .into());
    }
    Ok(sigma)
}

fn load_model(args: &ModelArgs) -> Result<(PolynomialModel, ModelSpec), CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    match &args.sigma_file {
        None => Ok((
            PolynomialModel::unit(args.n)?,
            ModelSpec {
                n: args.n,
                sigma: "unit".into(),
            },
        )),
        Some(path) => {
            let sigma = read_sigma_file(path, args.n)?;
            Ok((
                PolynomialModel::new(sigma)?,
                ModelSpec {
                    n: args.n,
                    sigma: path.display().to_string(),
                },
            ))
        }
    }
}

fn query(interval: Interval, u: f64) -> Result<CountQuery, CliError> {
    Ok(CountQuery::new(interval.lo, interval.hi, u)?)
}

fn query_spec(interval: Interval, u: f64) -> QuerySpec {
    QuerySpec {
        interval: [Real(interval.lo), Real(interval.hi)],
        u: Real(u),
        x: None,
    }
}

/// `RICE_MAXIMA_THREADS`, then `--workers`, then the available cores.
fn resolve_workers(flag: Option<usize>) -> Result<usize, CliError> {
    let workers = match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!("{THREADS_ENV}={v:?} is not a positive integer"))
        })?,
        Err(_) => {
            flag.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        }
    };
    if workers == 0 {
        return Err(CliError::Usage("workers must be at least 1".into()));
    }
    Ok(workers)
}

fn mc_config(mc: &McArgs) -> Result<MCConfig, CliError> {
    Ok(MCConfig::new(mc.trials, mc.seed)
        .with_workers(resolve_workers(mc.workers)?)
        .with_points_per_unit(mc.points_per_unit))
}

fn density(a: &args::DensityArgs, argv: &[String]) -> Result<Report, CliError> {
    let (model, spec) = load_model(&a.model)?;
    if a.u.is_nan() || !a.x.is_finite() {
        return Err(CliError::Usage("--x must be finite and --u not NaN".into()));
    }
    let value = maxima_density(&model, a.x, a.u)?;
    let mut rec = RunRecord::new("density", argv);
    rec.model = Some(spec);
    rec.query = Some(QuerySpec {
        interval: [Real(a.x), Real(a.x)],
        u: Real(a.u),
        x: Some(Real(a.x)),
    });
    rec.results.push(ResultRow {
        method: "exact".into(),
        value,
        abs_error: None,
        stderr: None,
        trials: None,
        seed: None,
    });
    let text = format!(
        "density of maxima below u = {} at x = {} (n = {}): {value}\n",
        a.u, a.x, a.model.n
    );
    Ok(Report::ok(rec, text))
}

fn expect(a: &args::ExpectArgs, argv: &[String]) -> Result<Report, CliError> {
    let (model, spec) = load_model(&a.model)?;
    let q = query(a.interval, a.u)?;
    let r = expected_count(&model, &q, a.rel_tol)?;
    let mut rec = RunRecord::new("expect", argv);
    rec.model = Some(spec);
    rec.query = Some(query_spec(a.interval, a.u));
    rec.results.push(ResultRow {
        method: r.method.to_string(),
        value: r.value,
        abs_error: Some(r.abs_error),
        stderr: None,
        trials: None,
        seed: None,
    });
    let text = format!(
        "expected maxima below u = {} on ({}, {}) (n = {}): {} +- {:.1e} [{}, {} evaluations]\n",
        a.u, a.interval.lo, a.interval.hi, a.model.n, r.value, r.abs_error, r.method, r.evaluations
    );
    Ok(Report::ok(rec, text))
}

fn asymptotic(a: &args::AsymptoticArgs, argv: &[String]) -> Result<Report, CliError> {
    let (model, spec) = load_model(&a.model)?;
    let family = a.family.0;
    let e = theorem_expansion_for(&model, family, a.u)?;
    let c = e.coefficients;
    let mut rec = RunRecord::new("asymptotic", argv);
    rec.model = Some(spec);
    let (lo, hi) = family.x_range();
    rec.query = Some(query_spec(
        Interval {
            lo,
            hi,
            family: Some(family),
        },
        a.u,
    ));
    rec.results.push(ResultRow {
        method: "asymptotic".into(),
        value: e.expansion_value,
        abs_error: None,
        stderr: None,
        trials: None,
        seed: None,
    });
    rec.terms = Some(Terms {
        family: family.name().into(),
        log_coefficient: c.log_coefficient,
        leading: e.leading,
        constant: c.constant,
        u_coefficient: c.u_coefficient,
        u_term: e.u_term,
        exact_log_value: e.assembled_value,
    });
    rec.warnings.extend(e.warning.clone());
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{family} expansion at n = {}, u = {}: {}",
        e.n, e.u, e.expansion_value
    );
    let _ = writeln!(text, "  log coefficient   {}", c.log_coefficient);
    let _ = writeln!(text, "  log term          {}", e.leading);
    let _ = writeln!(
        text,
        "  constant          {}  (integral part {} / (4 pi) = {})",
        c.constant,
        c.integral_constant,
        c.integral_constant / (4.0 * PI)
    );
    let _ = writeln!(text, "  u coefficient     {}", c.u_coefficient);
    let _ = writeln!(text, "  u term            {}", e.u_term);
    let _ = writeln!(text, "  with exact logs   {}", e.assembled_value);
    Ok(Report::ok(rec, text))
}

fn montecarlo(a: &args::MonteCarloArgs, argv: &[String]) -> Result<Report, CliError> {
    let (model, spec) = load_model(&a.model)?;
    query(a.interval, a.u)?;
    let cfg = mc_config(&a.mc)?;
    let r = estimate_em_levels(&model, a.interval.lo, a.interval.hi, &[a.u], &cfg)?[0];
    let mut rec = RunRecord::new("montecarlo", argv);
    rec.model = Some(spec);
    rec.query = Some(query_spec(a.interval, a.u));
    rec.results.push(ResultRow {
        method: "monte-carlo".into(),
        value: r.mean,
        abs_error: None,
        stderr: Some(r.stderr),
        trials: Some(r.trials),
        seed: Some(r.seed),
    });
    let text = format!(
        "simulated maxima below u = {} on ({}, {}) (n = {}): {} +- {} (stderr, {} trials, seed {})\n",
        a.u, a.interval.lo, a.interval.hi, a.model.n, r.mean, r.stderr, r.trials, r.seed
    );
    Ok(Report::ok(rec, text))
}

fn verify_constants(a: &args::VerifyArgs, argv: &[String]) -> Result<Report, CliError> {
    if let Some(r) = a.rel_tol {
        if !(r > 0.0) {
            return Err(CliError::Usage("--rel-tol must be positive".into()));
        }
    }
    let row = |name: String, computed: f64, tabulated: f64, default_tol: f64| {
        let tolerance = a.rel_tol.map_or(default_tol, |r| r * tabulated.abs());
        let diff = computed - tabulated;
        ConstantRow {
            name,
            computed,
            tabulated,
            diff,
            tolerance,
            pass: diff.abs() <= tolerance,
        }
    };
    let mut rows = Vec::new();
    for r in &REFERENCE_INTEGRALS {
        rows.push(row(r.name(), r.compute()?, r.value(), r.tolerance()));
    }
    for c in reference_constants() {
        rows.push(row(
            c.name.to_string(),
            c.compute()?,
            c.expected,
            c.tolerance,
        ));
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    let mut text = format!(
        "{:<26} {:>20} {:>16} {:>10} {:>9}  status\n",
        "name", "computed", "tabulated", "diff", "tol"
    );
    for r in &rows {
        let _ = writeln!(
            text,
            "{:<26} {:>20.15} {:>16} {:>10.2e} {:>9.1e}  {}",
            r.name,
            r.computed,
            r.tabulated,
            r.diff,
            r.tolerance,
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    let _ = writeln!(
        text,
        "{} of {} rows within tolerance",
        rows.len() - failed,
        rows.len()
    );
    let mut rec = RunRecord::new("verify-constants", argv);
    let total = rows.len();
    rec.constants = rows;
    Ok(Report {
        record: rec,
        text,
        failure: (failed > 0).then_some(CliError::Verification { failed, total }),
    })
}

fn compare(a: &args::CompareArgs, argv: &[String]) -> Result<Report, CliError> {
    if a.n_list.is_empty() {
        return Err(CliError::Usage(
            "compare needs a non-empty --n-list, e.g. --n-list 200,500,1000".into(),
        ));
    }
    if a.u_list.is_empty() || a.u_list.iter().any(|u| u.is_nan()) {
        return Err(CliError::Usage(
            "--u-list must hold levels, e.g. 0,1,inf".into(),
        ));
    }
    if a.n_list.contains(&0) {
        return Err(CliError::Usage(
            "degrees in --n-list must be at least 1".into(),
        ));
    }
    query(a.interval, 0.0)?;
    let workers = resolve_workers(a.workers)?;
    let mut rec = RunRecord::new("compare", argv);
    rec.query = Some(QuerySpec {
        interval: [Real(a.interval.lo), Real(a.interval.hi)],
        u: Real(a.u_list[0]),
        x: None,
    });
    for &n in &a.n_list {
        let model = PolynomialModel::unit(n)?;
        let mc = if a.trials > 0 {
            let cfg = MCConfig::new(a.trials, a.seed).with_workers(workers);
            Some(estimate_em_levels(
                &model,
                a.interval.lo,
                a.interval.hi,
                &a.u_list,
                &cfg,
            )?)
        } else {
            None
        };
        for (k, &u) in a.u_list.iter().enumerate() {
            let exact = match expected_count(
                &model,
                &CountQuery::new(a.interval.lo, a.interval.hi, u)?,
                a.rel_tol,
            ) {
                Ok(r) => Some(r),
                Err(e) => {
                    rec.warnings.push(format!("exact, n = {n}, u = {u}: {e}"));
                    None
                }
            };
            let asymptotic = match a.interval.family {
                Some(f) if u.is_finite() => match theorem_expansion_for(&model, f, u) {
                    Ok(e) => {
                        rec.warnings.extend(e.warning.clone());
                        Some(e.expansion_value)
                    }
                    Err(e) => {
                        rec.warnings
                            .push(format!("asymptotic, n = {n}, u = {u}: {e}"));
                        None
                    }
                },
                _ => None,
            };
            rec.cells.push(CompareCell {
                n,
                u: Real(u),
                exact: exact.map(|r| r.value),
                exact_err: exact.map(|r| r.abs_error),
                asymptotic,
                mc_mean: mc.as_ref().map(|m| m[k].mean),
                mc_stderr: mc.as_ref().map(|m| m[k].stderr),
            });
        }
    }
    let text = cells_csv(&rec.cells);
    Ok(Report::ok(rec, text))
}
