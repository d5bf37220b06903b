//! Large-`n` expansions of the expected count on each of the four pieces of
//! the real line, assembled from kernel integrals.

use std::f64::consts::PI;

use rice_core::{Family, PolynomialModel, Result, RiceError};

use crate::integrals::{h_integral, Selector};

/// Exponent of `n` inside a log term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogPower {
    ThreeHalves,
    Half,
}

impl LogPower {
    pub fn value(self) -> f64 {
        match self {
            LogPower::ThreeHalves => 1.5,
            LogPower::Half => 0.5,
        }
    }
}

/// `int_1^inf (a/t - b t^q / (n^p + (b/a) t^p)) dt` in closed form, where
/// `q = p - 1`: `(2a/3) ln((a/b) n^(3/2) + 1)` for `p = 3/2` and
/// `2a ln((a/b) n^(1/2) + 1)` for `p = 1/2`.
pub fn log_term(a: f64, b: f64, n: f64, power: LogPower) -> f64 {
    let p = power.value();
    (a / p) * (a / b * n.powf(p)).ln_1p()
}

/// `n`-independent pieces of a family's expansion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coefficients {
    /// `int H_f1 - int H_f1 H_f3`, the constant before division by `4 pi`.
    pub integral_constant: f64,
    /// `int H_f1 H_f2 - int H_f1 H_f3 H_f4`.
    pub u_coefficient: f64,
    /// Coefficient of `ln(n^p / u)`; zero for the tail families.
    pub log_coefficient: f64,
    /// Additive constant of the expansion.
    pub constant: f64,
}

/// `(a, b, c, d)` of the two log terms at `u = 1`; `b` and `d` scale with `u`.
fn log_parameters(family: Family) -> Option<(f64, f64, f64, f64, LogPower)> {
    let pi32 = PI.powf(1.5);
    match family {
        Family::Unit => Some((
            35f64.sqrt() / (115.0 * PI),
            10.0 / (23.0 * pi32),
            1.0 / (23.0 * PI),
            14.0 / (23.0 * pi32),
            LogPower::ThreeHalves,
        )),
        Family::NegUnit => Some((
            3f64.sqrt() / (11.0 * PI),
            4.0 / (11.0 * pi32),
            1.0 / (11.0 * PI),
            12.0 / (11.0 * pi32),
            LogPower::Half,
        )),
        Family::PosTail | Family::NegTail => None,
    }
}

fn kernel_family(family: Family) -> u8 {
    family.index() as u8
}

pub fn coefficients(family: Family) -> Result<Coefficients> {
    let f = kernel_family(family);
    let i = |s| h_integral(f, s).map(|r| r.value);
    let integral_constant = i(Selector::First)? - i(Selector::FirstThird)?;
    let u_coefficient = i(Selector::FirstSecond)? - i(Selector::FirstThirdFourth)?;
    let mut constant = integral_constant / (4.0 * PI);
    let mut log_coefficient = 0.0;
    if let Some((a, b, c, d, power)) = log_parameters(family) {
        let p = power.value();
        log_coefficient = (a - c) / p;
        // ln((a/b) n^p / u) = ln(n^p / u) + ln(a / b) with b taken at u = 1.
        constant += (a / p) * (a / b).ln() - (c / p) * (c / d).ln();
    }
    Ok(Coefficients {
        integral_constant,
        u_coefficient,
        log_coefficient,
        constant,
    })
}

/// Factor multiplying `u_coefficient * u`.
pub fn u_scale(family: Family, n: f64) -> f64 {
    match family {
        Family::PosTail | Family::Unit => 1.0 / (2.0 * (n * PI).powf(1.5)),
        Family::NegTail | Family::NegUnit => 1.0 / (2.0 * PI * (n * PI).sqrt()),
    }
}

/// Largest `u` for which the expansion is claimed: `n^(5/4)` on `(1, inf)`
/// and `(0, 1)`, `n^(1/4)` on the other two.
pub fn validity_scale(family: Family, n: f64) -> f64 {
    match family {
        Family::PosTail | Family::Unit => n.powf(1.25),
        Family::NegTail | Family::NegUnit => n.powf(0.25),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionResult {
    pub family: Family,
    pub n: usize,
    pub u: f64,
    pub coefficients: Coefficients,
    /// `log_coefficient * ln(n^p / u)`.
    pub leading: f64,
    /// `u_coefficient * u * u_scale(n)`.
    pub u_term: f64,
    /// With the log terms kept in their exact `ln(x + 1)` form.
    pub assembled_value: f64,
    /// `leading + constant + u_term`.
    pub expansion_value: f64,
    /// Set when `u` exceeds the validity scale.
    pub warning: Option<String>,
}

pub fn theorem_expansion(family: Family, n: usize, u: f64) -> Result<ExpansionResult> {
    if n == 0 {
        return Err(RiceError::InvalidQuery("degree must be at least 1".into()));
    }
    if !u.is_finite() {
        return Err(RiceError::InvalidQuery(format!(
            "level must be finite, got {u}"
        )));
    }
    let logs = log_parameters(family);
    if logs.is_some() && !(u > 0.0) {
        return Err(RiceError::InvalidQuery(format!(
            "the {family} expansion needs u > 0, got {u}"
        )));
    }
    let c = coefficients(family)?;
    let nf = n as f64;
    let u_term = c.u_coefficient * u * u_scale(family, nf);
    let mut leading = 0.0;
    let mut assembled_value = c.integral_constant / (4.0 * PI) + u_term;
    if let Some((a, b, cc, d, power)) = logs {
        leading = c.log_coefficient * (nf.powf(power.value()) / u).ln();
        assembled_value += log_term(a, b * u, nf, power) - log_term(cc, d * u, nf, power);
    }
    let scale = validity_scale(family, nf);
    let warning = (u.abs() > scale).then(|| {
        format!(
            "u = {u} is beyond the validity scale {scale:.4} of the {family} expansion at n = {n}"
        )
    });
    Ok(ExpansionResult {
        family,
        n,
        u,
        coefficients: c,
        leading,
        u_term,
        assembled_value,
        expansion_value: leading + c.constant + u_term,
        warning,
    })
}

/// [`theorem_expansion`] for a model, which must have unit increments and no
/// `sigma_0`.
pub fn theorem_expansion_for(
    model: &PolynomialModel,
    family: Family,
    u: f64,
) -> Result<ExpansionResult> {
    let unit = model.sigma0() == 0.0 && model.sigma().iter().all(|&s| s == 1.0);
    if !unit {
        return Err(RiceError::InvalidModel(
            "expansions hold only for unit increment variances".into(),
        ));
    }
    theorem_expansion(family, model.degree(), u)
}
