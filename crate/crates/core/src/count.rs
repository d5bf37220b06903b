//! Expected number of local maxima below `u` on an interval.

use std::fmt;

use crate::density::maxima_density;
use crate::error::{Result, RiceError};
use crate::model::PolynomialModel;
use crate::quadrature::{try_integrate, QuadOptions};

/// The four pieces `(1, inf)`, `(-inf, -1)`, `(0, 1)`, `(-1, 0)` of the real
/// line, each with its boundary-layer coordinate `t in (0, inf)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `x = 1 + t/n`
    PosTail,
    /// `x = -1 - t/n`
    NegTail,
    /// `x = n/(n+t)`
    Unit,
    /// `x = -n/(n+t)`
    NegUnit,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::PosTail,
        Family::NegTail,
        Family::Unit,
        Family::NegUnit,
    ];

    /// 1-based index in the order above.
    pub fn index(self) -> usize {
        match self {
            Family::PosTail => 1,
            Family::NegTail => 2,
            Family::Unit => 3,
            Family::NegUnit => 4,
        }
    }

    pub fn from_index(i: usize) -> Option<Family> {
        Family::ALL.get(i.wrapping_sub(1)).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::PosTail => "pos-tail",
            Family::NegTail => "neg-tail",
            Family::Unit => "unit",
            Family::NegUnit => "neg-unit",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Open interval covered in `x`.
    pub fn x_range(self) -> (f64, f64) {
        match self {
            Family::PosTail => (1.0, f64::INFINITY),
            Family::NegTail => (f64::NEG_INFINITY, -1.0),
            Family::Unit => (0.0, 1.0),
            Family::NegUnit => (-1.0, 0.0),
        }
    }

    pub fn x_of_t(self, n: f64, t: f64) -> f64 {
        match self {
            Family::PosTail => 1.0 + t / n,
            Family::NegTail => -1.0 - t / n,
            Family::Unit => n / (n + t),
            Family::NegUnit => -n / (n + t),
        }
    }

    /// `|dx/dt|`.
    pub fn jacobian(self, n: f64, t: f64) -> f64 {
        match self {
            Family::PosTail | Family::NegTail => 1.0 / n,
            Family::Unit | Family::NegUnit => n / ((n + t) * (n + t)),
        }
    }

    /// Inverse of [`Family::x_of_t`] on the closure of the range.
    pub fn t_of_x(self, n: f64, x: f64) -> f64 {
        match self {
            Family::PosTail => n * (x - 1.0),
            Family::NegTail => -n * (x + 1.0),
            Family::Unit | Family::NegUnit if x == 0.0 => f64::INFINITY,
            Family::Unit => n / x - n,
            Family::NegUnit => -n / x - n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Interval `(lo, hi)` with possibly infinite ends, and a level `u` that may
/// be `+inf` (count every maximum) or `-inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CountQuery {
    lo: f64,
    hi: f64,
    u: f64,
}

impl CountQuery {
    pub fn new(lo: f64, hi: f64, u: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || !(lo < hi) {
            return Err(RiceError::InvalidQuery(format!(
                "need lo < hi, got ({lo}, {hi})"
            )));
        }
        if u.is_nan() {
            return Err(RiceError::InvalidQuery("level is NaN".into()));
        }
        Ok(CountQuery { lo, hi, u })
    }

    pub fn family(family: Family, u: f64) -> Result<Self> {
        let (lo, hi) = family.x_range();
        Self::new(lo, hi, u)
    }

    pub fn whole_line(u: f64) -> Result<Self> {
        Self::new(f64::NEG_INFINITY, f64::INFINITY, u)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn with_level(&self, u: f64) -> Result<Self> {
        Self::new(self.lo, self.hi, u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exact,
    Asymptotic,
    MonteCarlo,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Asymptotic => "asymptotic",
            Method::MonteCarlo => "monte-carlo",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericResult {
    pub value: f64,
    pub abs_error: f64,
    pub method: Method,
    pub evaluations: usize,
}

/// One quadrature piece in a family's `t` coordinate. An infinite `t1` is
/// integrated through `t = t0 / s`, `s in (0, 1]`.
#[derive(Clone, Copy, Debug)]
struct Piece {
    family: Family,
    t0: f64,
    t1: f64,
}

/// `delta = 10/n` clamped to `[1e-6, 0.5]`.
fn split_delta(n: usize) -> f64 {
    (10.0 / n as f64).clamp(1e-6, 0.5)
}

fn pieces(n: usize, query: &CountQuery) -> Vec<Piece> {
    let nf = n as f64;
    let delta = split_delta(n);
    let mut out = Vec::new();
    for family in Family::ALL {
        let (xl, xr) = family.x_range();
        let a = query.lo.max(xl);
        let b = query.hi.min(xr);
        if !(a < b) {
            continue;
        }
        let (ta, tb) = (family.t_of_x(nf, a), family.t_of_x(nf, b));
        let (t0, t1) = if ta <= tb { (ta, tb) } else { (tb, ta) };
        let inner = match family {
            Family::PosTail => 1.0 + delta,
            Family::NegTail => -1.0 - delta,
            Family::Unit => 1.0 - delta,
            Family::NegUnit => -1.0 + delta,
        };
        let t_split = family.t_of_x(nf, inner);
        if t0 < t_split && t_split < t1 {
            out.push(Piece {
                family,
                t0,
                t1: t_split,
            });
            out.push(Piece {
                family,
                t0: t_split,
                t1,
            });
        } else {
            out.push(Piece { family, t0, t1 });
        }
    }
    out
}

fn integrate_piece(
    model: &PolynomialModel,
    piece: Piece,
    u: f64,
    opts: QuadOptions,
) -> Result<crate::quadrature::QuadResult> {
    let nf = model.degree() as f64;
    let fam = piece.family;
    let h = move |t: f64| -> Result<f64> {
        Ok(maxima_density(model, fam.x_of_t(nf, t), u)? * fam.jacobian(nf, t))
    };
    if piece.t1.is_finite() {
        try_integrate(h, piece.t0, piece.t1, opts)
    } else {
        let t0 = piece.t0;
        try_integrate(move |s| Ok(h(t0 / s)? * t0 / (s * s)), 0.0, 1.0, opts)
    }
}

/// Expected number of local maxima of `Q` in `(query.lo, query.hi)` whose
/// value is at most `query.u`, with relative tolerance `rel_tol`.
pub fn expected_count(
    model: &PolynomialModel,
    query: &CountQuery,
    rel_tol: f64,
) -> Result<NumericResult> {
    if !(1e-12..=1e-2).contains(&rel_tol) {
        return Err(RiceError::InvalidQuery(format!(
            "relative tolerance {rel_tol} outside [1e-12, 1e-2]"
        )));
    }
    let rank = model.effective_rank();
    if rank < 3 {
        return Err(RiceError::DegenerateModel { rank });
    }
    let mut result = NumericResult {
        value: 0.0,
        abs_error: 0.0,
        method: Method::Exact,
        evaluations: 0,
    };
    if query.u == f64::NEG_INFINITY {
        return Ok(result);
    }
    let parts = pieces(model.degree(), query);

    // A cheap pass sizes the absolute tolerance shared out between pieces.
    let crude = QuadOptions::new(0.0, 1e-3, 50);
    let mut rough = 0.0;
    for &p in &parts {
        let r = integrate_piece(model, p, query.u, crude)?;
        rough += r.value;
        result.evaluations += r.evaluations;
    }
    let opts = QuadOptions::new(0.25 * rel_tol * rough / parts.len() as f64, rel_tol, 4000);
    let mut converged = true;
    for &p in &parts {
        let r = integrate_piece(model, p, query.u, opts)?;
        result.value += r.value;
        result.abs_error += r.abs_error;
        result.evaluations += r.evaluations;
        converged &= r.converged;
    }
    result.value = result.value.max(0.0);
    if converged {
        Ok(result)
    } else {
        Err(RiceError::ToleranceNotMet {
            value: result.value,
            abs_error: result.abs_error,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_maps_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_index(f.index()), Some(f));
            assert_eq!(Family::from_name(f.name()), Some(f));
            for t in [1e-3, 0.5, 7.0, 300.0] {
                let x = f.x_of_t(50.0, t);
                assert!((f.t_of_x(50.0, x) - t).abs() < 1e-9 * t.max(1.0));
            }
        }
        assert_eq!(Family::from_index(0), None);
        assert_eq!(Family::Unit.t_of_x(4.0, 0.0), f64::INFINITY);
    }

    #[test]
    fn query_validation() {
        assert!(CountQuery::new(1.0, 1.0, 0.0).is_err());
        assert!(CountQuery::new(f64::NAN, 1.0, 0.0).is_err());
        assert!(CountQuery::new(0.0, 1.0, f64::NAN).is_err());
        assert!(CountQuery::whole_line(f64::INFINITY).is_ok());
    }

    #[test]
    fn pieces_cover_the_line() {
        let q = CountQuery::whole_line(0.0).unwrap();
        let p = pieces(100, &q);
        assert_eq!(p.len(), 8);
        let q = CountQuery::new(2.0, 2.5, 0.0).unwrap();
        let p = pieces(3, &q);
        assert_eq!(p.len(), 1);
        assert_eq!((p[0].t0, p[0].t1), (3.0, 4.5));
    }

    #[test]
    fn rejects_low_rank_and_bad_tolerance() {
        let m = PolynomialModel::unit(2).unwrap();
        let q = CountQuery::whole_line(1.0).unwrap();
        assert_eq!(
            expected_count(&m, &q, 1e-8),
            Err(RiceError::DegenerateModel { rank: 2 })
        );
        let m = PolynomialModel::unit(3).unwrap();
        assert!(matches!(
            expected_count(&m, &q, 0.5),
            Err(RiceError::InvalidQuery(_))
        ));
    }
}
