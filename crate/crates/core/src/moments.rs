//! Basis sums and the Gaussian covariance of `(Q, Q', Q'')` at a point.
//!
//! Conditional quantities are read off a Householder QR of the
//! sigma-weighted design columns taken in the order `(Q', Q'', Q)`, which
//! avoids forming the 3x3 determinant by cancellation. For `|x| > 1` the
//! columns are rebuilt in powers of `y = 1/x` and shifted by multiples of the
//! `Q'` column (an operation that leaves every conditional quantity
//! unchanged) so that nothing overflows.

use nalgebra::DMatrix;

use crate::error::{Result, RiceError};
use crate::model::PolynomialModel;
use crate::scaled::ScaledValue;

/// A transformed design column whose residual after projecting out the
/// earlier columns is below this fraction of its norm counts as dependent.
/// Genuine rank loss lands near machine precision; the smallest legitimate
/// ratio seen up to degree 10^6 is about 5e-4.
pub const RANK_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisSums {
    pub a: f64,
    pub b: f64,
    pub d: f64,
}

/// `a_k = sum_{j=k}^n x^j`, `b_k = sum j x^(j-1)`, `d_k = sum j(j-1) x^(j-2)`
/// by backward recurrence.
pub fn basis_eval(n: usize, x: f64, k: usize) -> BasisSums {
    assert!(k <= n, "basis index {k} exceeds degree {n}");
    let mut s = BasisSums {
        a: 0.0,
        b: 0.0,
        d: 0.0,
    };
    for j in (k..=n).rev() {
        let jf = j as f64;
        s.a += x.powi(j as i32);
        if j >= 1 {
            s.b += jf * x.powi(j as i32 - 1);
        }
        if j >= 2 {
            s.d += jf * (jf - 1.0) * x.powi(j as i32 - 2);
        }
    }
    s
}

/// Sigma-weighted columns with their power-of-|x| scale exponents.
struct Columns {
    /// Raw `U = Q`, `V = Q'`, `W = Q''` columns.
    raw: [Vec<f64>; 3],
    raw_exp: [i64; 3],
    /// `V`, `W`, `U` up to adding multiples of earlier columns, in QR order.
    cond: [Vec<f64>; 3],
    cond_exp: [i64; 3],
    /// The scaled `U` equals `cond[2] - w_shift * cond[1]` modulo `cond[0]`.
    w_shift: f64,
}

fn columns(model: &PolynomialModel, x: f64) -> Columns {
    let n = model.degree();
    let rows: Vec<(usize, f64)> = model.active_increments().collect();
    if x.abs() <= 1.0 {
        let mut a = vec![0.0; n + 2];
        let mut b = vec![0.0; n + 2];
        let mut d = vec![0.0; n + 2];
        let mut pw = vec![1.0; n + 1];
        for j in 1..=n {
            pw[j] = pw[j - 1] * x;
        }
        for j in (0..=n).rev() {
            let jf = j as f64;
            a[j] = a[j + 1] + pw[j];
            b[j] = b[j + 1] + if j >= 1 { jf * pw[j - 1] } else { 0.0 };
            d[j] = d[j + 1]
                + if j >= 2 {
                    jf * (jf - 1.0) * pw[j - 2]
                } else {
                    0.0
                };
        }
        let pick = |c: &[f64]| rows.iter().map(|&(k, s)| s * c[k]).collect::<Vec<_>>();
        let (u, v, w) = (pick(&a), pick(&b), pick(&d));
        // Near 0, Q is almost x Q'; U - xV + x^2 W / 2 = sum C(j-1, 2) x^j
        // removes that collinearity exactly.
        let (third, w_shift) = if x.abs() <= 0.5 {
            let mut e = vec![0.0; n + 2];
            for j in (0..=n).rev() {
                let jf = j as f64;
                e[j] = e[j + 1] + 0.5 * (jf - 1.0) * (jf - 2.0) * pw[j];
            }
            (pick(&e), 0.5 * x * x)
        } else {
            (u.clone(), 0.0)
        };
        return Columns {
            cond: [v.clone(), w.clone(), third],
            raw: [u, v, w],
            raw_exp: [0; 3],
            cond_exp: [0; 3],
            w_shift,
        };
    }

    // p(m) = sum_{i<=m} y^i with m = n - k, plus its first two y-derivatives.
    let y = 1.0 / x;
    let nf = n as f64;
    let mut p = vec![0.0; n + 1];
    let mut dp = vec![0.0; n + 1];
    let mut d2p = vec![0.0; n + 1];
    p[0] = 1.0;
    for m in 1..=n {
        p[m] = 1.0 + y * p[m - 1];
        dp[m] = p[m - 1] + y * dp[m - 1];
        d2p[m] = 2.0 * dp[m - 1] + y * d2p[m - 1];
    }
    let len = rows.len();
    let mut raw = [vec![0.0; len], vec![0.0; len], vec![0.0; len]];
    let mut cond = [vec![0.0; len], vec![0.0; len], vec![0.0; len]];
    for (r, &(k, s)) in rows.iter().enumerate() {
        let m = n - k;
        let v = nf * p[m] - y * dp[m];
        raw[0][r] = s * p[m];
        raw[1][r] = s * v;
        raw[2][r] = s * (nf * (nf - 1.0) * p[m] - 2.0 * (nf - 1.0) * y * dp[m] + y * y * d2p[m]);
        cond[0][r] = s * v;
        cond[1][r] = s * (y * d2p[m] - (nf - 1.0) * dp[m]);
        cond[2][r] = s * d2p[m] / (nf * (nf - 1.0));
    }
    let n = n as i64;
    Columns {
        raw,
        raw_exp: [n, n - 1, n - 2],
        cond,
        cond_exp: [n - 1, n - 3, n - 2],
        w_shift: x / (nf * (nf - 1.0)),
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

/// Everything derivable from one QR of the design columns at `x`.
struct Analysis {
    moments: MomentSet,
    geometry: ConditionalGeometry,
}

fn analyse(model: &PolynomialModel, x: f64) -> Result<Analysis> {
    if !x.is_finite() {
        return Err(RiceError::NonFinite("evaluation point"));
    }
    if model.effective_rank() < 3 {
        return Err(RiceError::DegenerateCovariance { x });
    }
    let cols = columns(model, x);
    let ax = x.abs();
    let pow = |k: i64| ScaledValue::powi(ax, k);
    let signed_pow = |k: i64| {
        let p = pow(k);
        if x < 0.0 && k % 2 != 0 {
            -p
        } else {
            p
        }
    };

    let [u, v, w] = &cols.raw;
    let [eu, ev, ew] = cols.raw_exp;
    let moment = |a: &[f64], b: &[f64], e: i64| ScaledValue::from_f64(dot(a, b)) * signed_pow(e);
    let a2 = moment(u, u, 2 * eu);
    let b2 = moment(v, v, 2 * ev);
    let d2 = moment(w, w, 2 * ew);
    let c = moment(u, v, eu + ev);
    let e = moment(u, w, eu + ew);
    let f = moment(v, w, ev + ew);

    let rows = cols.cond[0].len();
    let design = DMatrix::from_fn(rows, 3, |i, j| cols.cond[j][i]);
    let r = design.qr().r();
    let (r11, r22, r33) = (r[(0, 0)], r[(1, 1)], r[(2, 2)]);
    let r23 = r[(1, 2)] - cols.w_shift * r22;
    let [sv, sw, su] = cols.cond_exp;

    let det_sigma = ScaledValue::from_f64((r11 * r22 * r33).powi(2)) * pow(2 * (su + sv + sw));
    // Measured on the transformed columns, where the ratio reflects genuine
    // rank loss rather than the near-collinearity that the transform removes.
    let residual = [r11, r22, r33];
    let singular = cols.cond.iter().zip(residual).any(|(c, r)| {
        let norm = dot(c, c).sqrt();
        !(norm > 0.0 && r.is_finite()) || r.abs() < RANK_TOLERANCE * norm
    });
    if singular {
        return Err(RiceError::DegenerateCovariance { x });
    }

    let k = ScaledValue::from_f64((r23 * r23 + r33 * r33) / (2.0 * r22 * r22 * r33 * r33))
        * pow(-2 * sw);
    let l = ScaledValue::from_f64(1.0 / (2.0 * r33 * r33)) * pow(-2 * su);
    let m = ScaledValue::from_f64(-r23 / (2.0 * r22 * r33 * r33)) * signed_pow(-(su + sw));
    let s_completed = ScaledValue::from_f64(1.0 / (2.0 * r22 * r22)) * pow(-2 * sw);
    let s_printed = k - m * m / (ScaledValue::from_f64(4.0) * l);

    let hyp = r23.hypot(r33);
    let geometry = ConditionalGeometry {
        g1: (r22 / r11).abs() * pow(sw - sv).to_f64(),
        ln_sd_value: r33.abs().ln() + su as f64 * ax.ln(),
        rho: -r23 * r22.signum() * signed_pow(su + sw).signum() / hyp,
        one_minus_rho2: (r33 / hyp).powi(2),
    };
    let moments = MomentSet {
        a2,
        b2,
        d2,
        c,
        e,
        f,
        det_sigma,
        k: k.to_f64(),
        l: l.to_f64(),
        m: m.to_f64(),
        s: s_printed.to_f64(),
        s_completed: s_completed.to_f64(),
    };
    Ok(Analysis { moments, geometry })
}

/// Covariance of `(Q, Q', Q'')` at one point together with the coefficients
/// of the quadratic form `L r^2 + 2 M r t + K t^2` in the conditional
/// density of `(Q, Q'')` given `Q' = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentSet {
    pub a2: ScaledValue,
    pub b2: ScaledValue,
    pub d2: ScaledValue,
    /// Cov(Q, Q')
    pub c: ScaledValue,
    /// Cov(Q, Q'')
    pub e: ScaledValue,
    /// Cov(Q', Q'')
    pub f: ScaledValue,
    /// Determinant of the 3x3 covariance, as a Gram determinant.
    pub det_sigma: ScaledValue,
    pub k: f64,
    pub l: f64,
    pub m: f64,
    /// `K - M^2 / (4L)`.
    pub s: f64,
    s_completed: f64,
}

impl MomentSet {
    /// `K - M^2 / L`, the coefficient left after completing the square in `r`.
    pub fn s_completed(&self) -> f64 {
        self.s_completed
    }

    /// The determinant expanded as
    /// `A2 B2 D2 - A2 F^2 - B2 E^2 - C^2 D2 + 2 C E F`.
    /// Loses all accuracy to cancellation once `n` or `|x|` grows.
    pub fn det_quintic(&self) -> ScaledValue {
        let two = ScaledValue::from_f64(2.0);
        self.a2 * self.b2 * self.d2
            - self.a2 * self.f * self.f
            - self.b2 * self.e * self.e
            - self.c * self.c * self.d2
            + two * self.c * self.e * self.f
    }
}

pub fn moments(model: &PolynomialModel, x: f64) -> Result<MomentSet> {
    analyse(model, x).map(|a| a.moments)
}

/// Conditional structure of `(Q, Q'')` given `Q' = 0`, which is all the
/// maxima density needs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConditionalGeometry {
    /// `sqrt(Var(Q'' | Q') / Var(Q'))`.
    pub g1: f64,
    /// `ln sd(Q | Q', Q'')`.
    pub ln_sd_value: f64,
    /// Minus the partial correlation of `Q` and `Q''` given `Q'`.
    pub rho: f64,
    /// `1 - rho^2`, computed without cancellation.
    pub one_minus_rho2: f64,
}

impl ConditionalGeometry {
    pub fn at(model: &PolynomialModel, x: f64) -> Result<Self> {
        analyse(model, x).map(|a| a.geometry)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            basis_eval(2, 1.0, 1),
            BasisSums {
                a: 2.0,
                b: 3.0,
                d: 2.0
            }
        );
        assert_eq!(
            basis_eval(5, 0.0, 1),
            BasisSums {
                a: 0.0,
                b: 1.0,
                d: 2.0
            }
        );
        let expect = [(3.0, 6.0, 8.0), (2.0, 5.0, 8.0), (1.0, 3.0, 6.0)];
        for (k, &(a, b, d)) in (1..=3).zip(expect.iter()) {
            assert_eq!(basis_eval(3, 1.0, k), BasisSums { a, b, d });
        }
    }

    #[test]
    fn cubic_at_one() {
        let m = moments(&PolynomialModel::unit(3).unwrap(), 1.0).unwrap();
        let exact = [
            (m.a2, 14.0),
            (m.b2, 70.0),
            (m.d2, 164.0),
            (m.c, 31.0),
            (m.e, 46.0),
            (m.f, 106.0),
        ];
        for (got, want) in exact {
            assert_eq!(got.to_f64(), want);
        }
        assert_eq!(m.det_quintic().to_f64(), 4.0);
        assert!(close(m.det_sigma.to_f64(), 4.0, 1e-12));
        assert!(close(m.k, 19.0 / 8.0, 1e-12));
        assert!(close(m.l, 30.5, 1e-12));
        assert!(close(m.m, 8.25, 1e-12));
        assert!(close(m.s, 2.375 - 8.25 * 8.25 / 122.0, 1e-12));
        assert!(close(m.s_completed(), 2.375 - 8.25 * 8.25 / 30.5, 1e-12));
    }

    #[test]
    fn quadratic_is_degenerate() {
        let model = PolynomialModel::unit(2).unwrap();
        for x in [-2.0, -1.0, 0.3, 1.0, 4.0] {
            assert_eq!(
                moments(&model, x),
                Err(RiceError::DegenerateCovariance { x })
            );
        }
    }

    #[test]
    fn zero_without_constant_increment_is_degenerate() {
        let model = PolynomialModel::unit(6).unwrap();
        assert!(matches!(
            moments(&model, 0.0),
            Err(RiceError::DegenerateCovariance { .. })
        ));
        let with0 = PolynomialModel::with_sigma0(1.0, vec![1.0; 6]).unwrap();
        assert!(moments(&with0, 0.0).is_ok());
    }

    #[test]
    fn both_bases_agree_across_one() {
        let model = PolynomialModel::unit(40).unwrap();
        for x in [1.0, -1.0] {
            let inside = ConditionalGeometry::at(&model, x * (1.0 - 1e-12)).unwrap();
            let outside = ConditionalGeometry::at(&model, x * (1.0 + 1e-12)).unwrap();
            assert!(close(inside.g1, outside.g1, 1e-9));
            assert!(close(inside.ln_sd_value, outside.ln_sd_value, 1e-9));
            assert!(close(inside.rho, outside.rho, 1e-9));
        }
    }

    #[test]
    fn large_degree_far_out_stays_finite() {
        let model = PolynomialModel::unit(100_000).unwrap();
        let m = moments(&model, 1.0 + 50.0 / 100_000.0).unwrap();
        assert!(m.a2.ln_abs().is_finite() && m.det_sigma.ln_abs().is_finite());
        let g = ConditionalGeometry::at(&model, 7.0).unwrap();
        assert!(g.g1.is_finite() && g.ln_sd_value.is_finite());
    }
}
