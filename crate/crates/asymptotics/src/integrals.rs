//! Improper integrals of kernel products over `t in (0, inf)`.

use std::fmt;
use std::sync::OnceLock;

use rice_core::quadrature::{try_integrate, QuadOptions};
use rice_core::{Result, RiceError};

use crate::kernel::{h_kernel, KernelId};

/// Which product of a family's kernels is integrated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    /// `H_f1`
    First,
    /// `H_f1 H_f3`
    FirstThird,
    /// `H_f1 H_f2`
    FirstSecond,
    /// `H_f1 H_f3 H_f4`
    FirstThirdFourth,
}

impl Selector {
    pub const ALL: [Selector; 4] = [
        Selector::First,
        Selector::FirstThird,
        Selector::FirstSecond,
        Selector::FirstThirdFourth,
    ];

    pub fn indices(self) -> &'static [u8] {
        match self {
            Selector::First => &[1],
            Selector::FirstThird => &[1, 3],
            Selector::FirstSecond => &[1, 2],
            Selector::FirstThirdFourth => &[1, 3, 4],
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Algebraic tail `coef * t^power` removed on `t >= 1` so that the
/// family 3 and 4 integrals converge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Subtraction {
    pub coef: f64,
    pub power: f64,
}

pub fn subtraction(family: u8, sel: Selector) -> Option<Subtraction> {
    let s35 = 35f64.sqrt();
    let s3 = 3f64.sqrt();
    let (coef, power) = match (family, sel) {
        (3, Selector::First) => (4.0 * s35 / 115.0, -1.0),
        (3, Selector::FirstThird) => (4.0 / 23.0, -1.0),
        (3, Selector::FirstSecond) => (28.0 / 23.0, 0.5),
        (3, Selector::FirstThirdFourth) => (20.0 / 23.0, 0.5),
        (4, Selector::First) => (4.0 * s3 / 11.0, -1.0),
        (4, Selector::FirstThird) => (4.0 / 11.0, -1.0),
        (4, Selector::FirstSecond) => (24.0 / 11.0, -0.5),
        (4, Selector::FirstThirdFourth) => (8.0 / 11.0, -0.5),
        _ => return None,
    };
    Some(Subtraction { coef, power })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

/// Lower end of the quadrature; `(0, T_LO)` is estimated separately.
pub const T_LO: f64 = 1e-6;
/// Upper end for families 1 and 2, whose products keep an algebraic tail
/// that is estimated from the local power law.
pub const T_HI: f64 = 1e6;
/// Upper end for families 3 and 4. Past the subtraction only terms of
/// order `t^k e^(-t)` remain, far below rounding by here.
pub const T_HI_SUBTRACTED: f64 = 200.0;
const REL_TOL: f64 = 1e-12;
const ABS_TOL: f64 = 1e-14;
const MAX_PANELS: usize = 6000;

/// The integrand `prod H_fi(t) - sub(t) I[t >= 1]`.
pub fn integrand(family: u8, sel: Selector, t: f64) -> Result<f64> {
    let mut v = 1.0;
    for &i in sel.indices() {
        v *= h_kernel(KernelId::new(family, i)?, t)?;
    }
    if let Some(s) = subtraction(family, sel) {
        if t >= 1.0 {
            v -= s.coef * t.powf(s.power);
        }
    }
    Ok(v)
}

/// `int_0^a g` for `g ~ c t^alpha`, from the exponent seen on `(a/4, a)`.
/// The error is the change between the two exponent estimates.
fn power_law_end(g: impl Fn(f64) -> Result<f64>, a: f64, lower: bool) -> Result<(f64, f64)> {
    let (g0, g1, g2) = (g(a)?, g(a / 2.0)?, g(a / 4.0)?);
    if g0 == 0.0 {
        return Ok((0.0, 0.0));
    }
    let piece = |ga: f64, gb: f64| -> Option<f64> {
        if ga.signum() != gb.signum() || gb == 0.0 {
            return None;
        }
        let alpha = (ga / gb).log2();
        if lower && alpha > -1.0 {
            Some(a * ga / (alpha + 1.0))
        } else if !lower && alpha < -1.0 {
            Some(-a * ga / (alpha + 1.0))
        } else {
            None
        }
    };
    match (piece(g0, g1), piece(g1, g2)) {
        (Some(v), Some(w)) => Ok((v, (v - w).abs())),
        (Some(v), None) => Ok((v, v.abs())),
        _ => Err(RiceError::ToleranceNotMet {
            value: f64::NAN,
            abs_error: f64::INFINITY,
        }),
    }
}

fn compute(family: u8, sel: Selector) -> Result<IntegralResult> {
    let g = |t: f64| integrand(family, sel, t);
    let opts = QuadOptions::new(ABS_TOL, REL_TOL, MAX_PANELS);
    // t = e^s; the break at s = 0 is where the subtraction switches on.
    let mut value = 0.0;
    let mut abs_error = 0.0;
    let mut evaluations = 0;
    let mut converged = true;
    let subtracted = subtraction(family, sel).is_some();
    let t_hi = if subtracted { T_HI_SUBTRACTED } else { T_HI };
    for (a, b) in [(T_LO.ln(), 0.0), (0.0, t_hi.ln())] {
        let r = try_integrate(|s| Ok(g(s.exp())? * s.exp()), a, b, opts)?;
        value += r.value;
        abs_error += r.abs_error;
        evaluations += r.evaluations;
        converged &= r.converged;
    }
    let (head, head_err) = power_law_end(g, T_LO, true)?;
    let (tail, tail_err) = if subtracted {
        (0.0, g(t_hi)?.abs() * t_hi)
    } else {
        power_law_end(g, t_hi, false)?
    };
    value += head + tail;
    abs_error += head_err + tail_err;
    evaluations += 6;
    let result = IntegralResult {
        value,
        abs_error,
        evaluations,
    };
    if converged {
        Ok(result)
    } else {
        Err(RiceError::ToleranceNotMet { value, abs_error })
    }
}

/// `int_0^inf (prod_{i in sel} H_fi(t) - sub(t) I[t >= 1]) dt`, computed
/// once per process.
pub fn h_integral(family: u8, sel: Selector) -> Result<IntegralResult> {
    if !(1..=4).contains(&family) {
        return Err(RiceError::InvalidQuery(format!(
            "no kernel family {family}"
        )));
    }
    static CACHE: [[OnceLock<Result<IntegralResult>>; 4]; 4] =
        [const { [const { OnceLock::new() }; 4] }; 4];
    CACHE[family as usize - 1][sel.slot()]
        .get_or_init(|| compute(family, sel))
        .clone()
}
