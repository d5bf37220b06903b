//! Error-function pieces used by the closed-form maxima density.

use std::f64::consts::PI;

use crate::quadrature::{gauss_fixed, gauss_legendre_20, integrate, QuadOptions};

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;
const CF_SWITCH: f64 = 4.0;
const CF_TERMS: usize = 120;

/// Tail `T` of `erfc(z) = e^(-z^2) / sqrt(pi) / (z + T)`, bottom-up.
fn erfc_cf_tail(z: f64) -> f64 {
    let mut t = 0.0;
    for k in (1..=CF_TERMS).rev() {
        t = (k as f64 * 0.5) / (z + t);
    }
    t
}

/// Scaled complementary error function `exp(z^2) erfc(z)`.
pub fn erfcx(z: f64) -> f64 {
    if z < CF_SWITCH {
        (z * z).exp() * libm::erfc(z)
    } else {
        FRAC_1_SQRT_PI / (z + erfc_cf_tail(z))
    }
}

/// `1/sqrt(pi) - z erfcx(z)`, which cancels badly for large `z`.
pub fn mills_gap(z: f64) -> f64 {
    if z < CF_SWITCH {
        FRAC_1_SQRT_PI - z * erfcx(z)
    } else {
        let t = erfc_cf_tail(z);
        FRAC_1_SQRT_PI * t / (z + t)
    }
}

/// `erfc(-g) - rho exp(-g^2 (1 - rho^2)) erfc(-rho g)`, the bracket of the
/// maxima density, for `|rho| <= 1`. `omr2` must be `1 - rho^2`.
pub fn density_bracket(g: f64, rho: f64, omr2: f64) -> f64 {
    if g == f64::INFINITY {
        return 2.0;
    }
    if g == f64::NEG_INFINITY {
        return 0.0;
    }
    if rho <= 0.0 {
        return libm::erfc(-g) - rho * (-g * g * omr2).exp() * libm::erfc(-rho * g);
    }
    if g >= 0.0 {
        let diff = if g * (1.0 - rho) <= 1.0 {
            let rule = gauss_legendre_20();
            gauss_fixed(|s| 2.0 * FRAC_1_SQRT_PI * (-s * s).exp(), rho * g, g, rule)
        } else {
            libm::erfc(rho * g) - libm::erfc(g)
        };
        let lead = omr2 / (1.0 + rho) + rho * -(-g * g * omr2).exp_m1();
        return diff + libm::erfc(-rho * g) * lead;
    }
    let gamma = -g;
    (-gamma * gamma).exp() * negative_level_factor(gamma, rho, omr2)
}

/// `exp(gamma^2) * bracket(-gamma)` for `rho > 0`, `gamma > 0`.
fn negative_level_factor(gamma: f64, rho: f64, omr2: f64) -> f64 {
    let lead = erfcx(gamma);
    let sub = rho * erfcx(rho * gamma);
    if sub <= 0.5 * lead {
        return lead - sub;
    }
    // The difference cancels; integrate its derivative in rho instead:
    // 2(1-rho^2) int_0^inf exp(-2 gamma v - v^2) m(rho (gamma + v)) dv.
    let top = -gamma + (gamma * gamma + 40.0).sqrt();
    let r = integrate(
        |v| (-v * (2.0 * gamma + v)).exp() * mills_gap(rho * (gamma + v)),
        0.0,
        top,
        QuadOptions::new(0.0, 1e-14, 200),
    );
    2.0 * omr2 * r.value
}

/// `1 / (4 pi)`.
pub(crate) const INV_4PI: f64 = 0.25 / PI;
