//! Expected density of local maxima below a level.

use std::f64::consts::LN_2;

use crate::error::{Result, RiceError};
use crate::model::PolynomialModel;
use crate::moments::{moments, ConditionalGeometry};
use crate::special::{density_bracket, INV_4PI};

/// `f(x) = G1 / (4 pi) * F(g, rho)` with `g = u / (sqrt(2) sd(Q | Q', Q''))`,
/// where `F` is [`density_bracket`].
pub fn density_from_geometry(geo: &ConditionalGeometry, u: f64) -> f64 {
    let g = if u.is_infinite() || u == 0.0 {
        u
    } else {
        u.signum() * (u.abs().ln() - geo.ln_sd_value - 0.5 * LN_2).exp()
    };
    INV_4PI * geo.g1 * density_bracket(g, geo.rho, geo.one_minus_rho2)
}

/// Expected number of local maxima per unit `x` with value at most `u`.
/// `u` may be `+inf` (all maxima) or `-inf`.
pub fn maxima_density(model: &PolynomialModel, x: f64, u: f64) -> Result<f64> {
    if u.is_nan() {
        return Err(RiceError::InvalidQuery("level is NaN".into()));
    }
    let geo = ConditionalGeometry::at(model, x)?;
    let f = density_from_geometry(&geo, u);
    if f.is_finite() {
        Ok(f)
    } else {
        Err(RiceError::NonFinite("maxima density"))
    }
}

/// Which `S` to feed the textbook `G1..G5` form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SConvention {
    /// `S = K - M^2 / (4L)`.
    Printed,
    /// `S = K - M^2 / L`.
    CompletedSquare,
}

/// Diagnostic evaluation of the erf form
/// `G1 [erf(G2) + 1] / (4 pi) - G1 G3 [erf(G4) + 1] exp(G5) / (4 pi)` with
/// `G1 = 1 / (2 S sqrt(2 L det))`, `G2 = u sqrt(L)`, `G3 = |M| / sqrt(LK)`,
/// `G4 = u |M| / sqrt(K)`, `G5 = -L S u^2 / K`.
///
/// Agrees with [`maxima_density`] exactly when `M >= 0` and the completed
/// square is used.
pub fn printed_density(
    model: &PolynomialModel,
    x: f64,
    u: f64,
    convention: SConvention,
) -> Result<f64> {
    let m = moments(model, x)?;
    let s = match convention {
        SConvention::Printed => m.s,
        SConvention::CompletedSquare => m.s_completed(),
    };
    let ln_g1 = -(2.0 * s).ln() - 0.5 * ((2.0 * m.l).ln() + m.det_sigma.ln_abs());
    let g1 = ln_g1.exp();
    let g3 = m.m.abs() / (m.l * m.k).sqrt();
    let (first, second) = if u == f64::INFINITY {
        (2.0, 0.0)
    } else if u == f64::NEG_INFINITY {
        (0.0, 0.0)
    } else {
        let g2 = u * m.l.sqrt();
        let g4 = u * m.m.abs() / m.k.sqrt();
        let g5 = -m.l * s * u * u / m.k;
        (libm::erf(g2) + 1.0, (libm::erf(g4) + 1.0) * g5.exp())
    };
    Ok(INV_4PI * g1 * (first - g3 * second))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_levels() {
        let m = PolynomialModel::unit(3).unwrap();
        assert_eq!(maxima_density(&m, 1.0, f64::NEG_INFINITY).unwrap(), 0.0);
        // sqrt(Var(Q'' | Q') / Var(Q')) / (2 pi) with Var(Q'' | Q') = 164 - 106^2 / 70.
        let g1 = ((164.0 - 106.0 * 106.0 / 70.0) / 70.0_f64).sqrt();
        let f = maxima_density(&m, 1.0, f64::INFINITY).unwrap();
        assert!((f - g1 / (2.0 * std::f64::consts::PI)).abs() < 1e-14);
    }

    #[test]
    fn printed_form_agrees_only_with_completed_square() {
        let m = PolynomialModel::unit(3).unwrap();
        for u in [-0.2, 0.0, 0.7, 3.0] {
            let f = maxima_density(&m, 1.0, u).unwrap();
            let fixed = printed_density(&m, 1.0, u, SConvention::CompletedSquare).unwrap();
            let raw = printed_density(&m, 1.0, u, SConvention::Printed).unwrap();
            assert!((f - fixed).abs() < 1e-9 * f, "u = {u}: {f} vs {fixed}");
            assert!((f - raw).abs() > 1e-3 * f);
        }
    }
}
