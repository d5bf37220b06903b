//! Published values of the kernel integrals and expansion constants, kept as
//! regression data. Nothing in the computation reads them.

use std::f64::consts::PI;

use rice_core::{Family, Result};

use crate::expansion::{coefficients, log_term, LogPower};
use crate::integrals::{h_integral, Selector};

#[derive(Clone, Copy, Debug)]
pub struct ReferenceIntegral {
    pub family: u8,
    pub selector: Selector,
    /// As printed, so the tolerance can follow the digits given.
    pub text: &'static str,
}

impl ReferenceIntegral {
    pub fn value(&self) -> f64 {
        self.text.parse().expect("reference literal")
    }

    /// `1e-6` when ten or more decimals are printed, `1e-5` otherwise.
    pub fn tolerance(&self) -> f64 {
        let decimals = self.text.split('.').nth(1).map_or(0, str::len);
        if decimals >= 10 {
            1e-6
        } else {
            1e-5
        }
    }

    pub fn name(&self) -> String {
        let prod: String = self
            .selector
            .indices()
            .iter()
            .map(|i| format!("H{}{}", self.family, i))
            .collect();
        if self.family >= 3 {
            format!("int({prod} - tail)")
        } else {
            format!("int({prod})")
        }
    }

    pub fn compute(&self) -> Result<f64> {
        h_integral(self.family, self.selector).map(|r| r.value)
    }
}

macro_rules! ri {
    ($f:expr, $s:ident, $t:expr) => {
        ReferenceIntegral {
            family: $f,
            selector: Selector::$s,
            text: $t,
        }
    };
}

pub const REFERENCE_INTEGRALS: [ReferenceIntegral; 16] = [
    ri!(1, First, "0.02789960660"),
    ri!(1, FirstThird, "0.02659218098"),
    ri!(1, FirstSecond, "0.3326450540"),
    ri!(1, FirstThirdFourth, "0.297579554"),
    ri!(2, First, "0.10652624145"),
    ri!(2, FirstThird, "0.090270992310"),
    ri!(2, FirstSecond, "0.3240703564"),
    ri!(2, FirstThirdFourth, "0.2243026030"),
    ri!(3, First, "-0.2545810"),
    ri!(3, FirstThird, "-0.2085374"),
    ri!(3, FirstSecond, "-4.808177963"),
    ri!(3, FirstThirdFourth, "-2.774789804"),
    ri!(4, First, "-0.1146419848"),
    ri!(4, FirstThird, "-0.0801100983"),
    ri!(4, FirstSecond, "-0.7769335"),
    ri!(4, FirstThirdFourth, "-0.1820104"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantKind {
    /// `int H_f1 - int H_f1 H_f3`.
    IntegralConstant(Family),
    UCoefficient(Family),
    /// Full additive constant including the log-term pieces.
    Constant(Family),
    LogCoefficient(Family),
    /// Closed-form log identity against quadrature of its defining integral,
    /// at `n = 100`, `u = 1`.
    LogIdentity(Family),
}

#[derive(Clone, Copy, Debug)]
pub struct ReferenceConstant {
    pub name: &'static str,
    pub kind: ConstantKind,
    pub expected: f64,
    pub tolerance: f64,
}

impl ReferenceConstant {
    pub fn compute(&self) -> Result<f64> {
        match self.kind {
            ConstantKind::IntegralConstant(f) => coefficients(f).map(|c| c.integral_constant),
            ConstantKind::UCoefficient(f) => coefficients(f).map(|c| c.u_coefficient),
            ConstantKind::Constant(f) => coefficients(f).map(|c| c.constant),
            ConstantKind::LogCoefficient(f) => coefficients(f).map(|c| c.log_coefficient),
            ConstantKind::LogIdentity(f) => log_identity_by_quadrature(f),
        }
    }
}

fn log_identity_parameters(family: Family) -> (f64, f64, f64, f64, LogPower) {
    let pi32 = PI.powf(1.5);
    match family {
        Family::Unit => (
            35f64.sqrt() / (115.0 * PI),
            10.0 / (23.0 * pi32),
            1.0 / (23.0 * PI),
            14.0 / (23.0 * pi32),
            LogPower::ThreeHalves,
        ),
        _ => (
            3f64.sqrt() / (11.0 * PI),
            4.0 / (11.0 * pi32),
            1.0 / (11.0 * PI),
            12.0 / (11.0 * pi32),
            LogPower::Half,
        ),
    }
}

/// `int_1^inf (a/t - b t^(p-1)/(n^p + (b/a) t^p)) dt` by quadrature, with
/// `t = 1/s`.
pub fn log_integral_by_quadrature(a: f64, b: f64, n: f64, power: LogPower) -> f64 {
    use rice_core::quadrature::{integrate, QuadOptions};
    let p = power.value();
    let np = n.powf(p);
    let f = |t: f64| a / t - b * t.powf(p - 1.0) / (np + b / a * t.powf(p));
    integrate(
        |s| f(1.0 / s) / (s * s),
        0.0,
        1.0,
        QuadOptions::new(1e-15, 1e-13, 4000),
    )
    .value
}

fn log_identity_by_quadrature(family: Family) -> Result<f64> {
    let (a, b, c, d, power) = log_identity_parameters(family);
    Ok(log_integral_by_quadrature(a, b, 100.0, power)
        - log_integral_by_quadrature(c, d, 100.0, power))
}

fn log_identity_closed_form(family: Family) -> f64 {
    let (a, b, c, d, power) = log_identity_parameters(family);
    log_term(a, b, 100.0, power) - log_term(c, d, 100.0, power)
}

pub fn reference_constants() -> [ReferenceConstant; 12] {
    let s35 = 35f64.sqrt();
    let s3 = 3f64.sqrt();
    [
        ReferenceConstant {
            name: "pos-tail constant",
            kind: ConstantKind::IntegralConstant(Family::PosTail),
            expected: 0.0013074,
            tolerance: 1e-5,
        },
        ReferenceConstant {
            name: "pos-tail u coefficient",
            kind: ConstantKind::UCoefficient(Family::PosTail),
            expected: 0.0350655,
            tolerance: 1e-5,
        },
        ReferenceConstant {
            name: "neg-tail constant",
            kind: ConstantKind::IntegralConstant(Family::NegTail),
            expected: 0.0162552,
            tolerance: 1e-5,
        },
        ReferenceConstant {
            name: "neg-tail u coefficient",
            kind: ConstantKind::UCoefficient(Family::NegTail),
            expected: 0.0997677,
            tolerance: 1e-5,
        },
        ReferenceConstant {
            name: "unit u coefficient",
            kind: ConstantKind::UCoefficient(Family::Unit),
            expected: -2.033388,
            tolerance: 1e-5,
        },
        ReferenceConstant {
            name: "neg-unit u coefficient",
            kind: ConstantKind::UCoefficient(Family::NegUnit),
            expected: -0.594923,
            tolerance: 1e-5,
        },
        ReferenceConstant {
            name: "neg-unit constant",
            kind: ConstantKind::Constant(Family::NegUnit),
            expected: 0.081413,
            tolerance: 1e-4,
        },
        ReferenceConstant {
            name: "unit constant",
            kind: ConstantKind::Constant(Family::Unit),
            expected: -0.001648,
            tolerance: 1e-4,
        },
        ReferenceConstant {
            name: "unit log coefficient",
            kind: ConstantKind::LogCoefficient(Family::Unit),
            expected: 2.0 * (s35 - 5.0) / (345.0 * PI),
            tolerance: 1e-12,
        },
        ReferenceConstant {
            name: "neg-unit log coefficient",
            kind: ConstantKind::LogCoefficient(Family::NegUnit),
            expected: 2.0 * (s3 - 1.0) / (11.0 * PI),
            tolerance: 1e-12,
        },
        ReferenceConstant {
            name: "unit log identity",
            kind: ConstantKind::LogIdentity(Family::Unit),
            expected: log_identity_closed_form(Family::Unit),
            tolerance: 1e-10,
        },
        ReferenceConstant {
            name: "neg-unit log identity",
            kind: ConstantKind::LogIdentity(Family::NegUnit),
            expected: log_identity_closed_form(Family::NegUnit),
            tolerance: 1e-10,
        },
    ]
}
