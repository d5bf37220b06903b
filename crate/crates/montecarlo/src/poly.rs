//! Polynomial values that stay finite for large `|x|` and degree.

/// `mantissa * e^(ln_scale)`; `ln_scale` is zero for `|x| <= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    pub mantissa: f64,
    pub ln_scale: f64,
}

impl Scaled {
    pub fn signum(self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    /// `value <= u` without forming an overflowing value.
    pub fn at_most(self, u: f64) -> bool {
        if u == f64::INFINITY {
            return true;
        }
        let v = self.mantissa * self.ln_scale.exp();
        if v.is_finite() {
            v <= u
        } else {
            self.mantissa < 0.0
        }
    }
}

/// `sum c_i x^i` by Horner in `x`, or in `1/x` with `x^d` factored out.
pub fn eval(coeffs: &[f64], x: f64) -> Scaled {
    if x.abs() <= 1.0 {
        let mantissa = coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
        return Scaled {
            mantissa,
            ln_scale: 0.0,
        };
    }
    let d = coeffs.len().saturating_sub(1);
    let y = 1.0 / x;
    let r = coeffs.iter().fold(0.0, |acc, &c| acc * y + c);
    let sign = if x < 0.0 && d % 2 == 1 { -1.0 } else { 1.0 };
    Scaled {
        mantissa: sign * r,
        ln_scale: d as f64 * x.abs().ln(),
    }
}

/// Sign of `sum c_i x^i`, computed as in [`eval`] without the scale.
pub fn sign(coeffs: &[f64], x: f64) -> f64 {
    let m = if x.abs() <= 1.0 {
        coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    } else {
        let y = 1.0 / x;
        let r = coeffs.iter().fold(0.0, |acc, &c| acc * y + c);
        if x < 0.0 && coeffs.len() % 2 == 0 {
            -r
        } else {
            r
        }
    };
    if m == 0.0 {
        0.0
    } else {
        m.signum()
    }
}

/// Coefficients of the derivative.
pub fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| i as f64 * c)
        .collect()
}

/// Fujiwara bound: every root has `|x| <= bound`. `None` for a zero or
/// constant polynomial.
fn fujiwara(coeffs: &[f64]) -> Option<f64> {
    let d = coeffs.iter().rposition(|&c| c != 0.0)?;
    if d == 0 {
        return None;
    }
    let lead = coeffs[d].abs();
    let b = (1..=d)
        .map(|k| {
            let r = coeffs[d - k].abs() / lead;
            if k == d {
                (0.5 * r).powf(1.0 / k as f64)
            } else {
                r.powf(1.0 / k as f64)
            }
        })
        .fold(0.0, f64::max);
    Some(2.0 * b)
}

/// Every root of the polynomial lies in `|x| <= outer`, and every nonzero
/// root in `|x| >= inner`. `None` where the bound is void.
pub fn root_bounds(coeffs: &[f64]) -> (Option<f64>, Option<f64>) {
    let outer = fujiwara(coeffs);
    let inner = if coeffs.first().is_some_and(|&c| c != 0.0) {
        let rev: Vec<f64> = coeffs.iter().rev().copied().collect();
        fujiwara(&rev).map(|b| 1.0 / b)
    } else {
        None
    };
    (outer, inner)
}
