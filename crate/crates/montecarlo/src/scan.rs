//! Local maxima of one sampled polynomial, located by a sign scan of `Q'`
//! on a lattice in the boundary-layer coordinates and refined by bisection.

use rice_core::Family;

use crate::poly::{derivative, eval, root_bounds, sign, Scaled};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanConfig {
    /// Lattice points per unit of `ln t`.
    pub points_per_unit: usize,
    /// Bisection stops when the bracket in `x` is this small relative to
    /// `max(1, |x|)`.
    pub abscissa_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            points_per_unit: 512,
            abscissa_tol: 1e-12,
        }
    }
}

/// Below this `t` the lattice has a single cell reaching `t = 0` (`x = +-1`).
const T_FLOOR: f64 = 1e-3;
/// `t` range used when the inner root bound is void (`Q'(0) = 0`).
const T_FALLBACK: f64 = 1e12;
const MAX_BISECTIONS: usize = 400;

struct Piece {
    family: Family,
    t0: f64,
    t1: f64,
}

fn pieces(n: f64, lo: f64, hi: f64) -> Vec<Piece> {
    Family::ALL
        .into_iter()
        .filter_map(|family| {
            let (xl, xr) = family.x_range();
            let (a, b) = (lo.max(xl), hi.min(xr));
            if !(a < b) {
                return None;
            }
            let (ta, tb) = (family.t_of_x(n, a), family.t_of_x(n, b));
            Some(Piece {
                family,
                t0: ta.min(tb),
                t1: ta.max(tb),
            })
        })
        .collect()
}

/// `x` grows with `t` on these families.
fn increasing(family: Family) -> bool {
    matches!(family, Family::PosTail | Family::NegUnit)
}

struct Sampled<'a> {
    q: &'a [f64],
    dq: Vec<f64>,
    n: f64,
}

impl Sampled<'_> {
    fn x(&self, family: Family, t: f64) -> f64 {
        if t == f64::INFINITY {
            match family {
                Family::PosTail => f64::INFINITY,
                Family::NegTail => f64::NEG_INFINITY,
                Family::Unit | Family::NegUnit => 0.0,
            }
        } else {
            family.x_of_t(self.n, t)
        }
    }

    /// Sign of `Q'(x)`; an exact zero is moved one ulp to the right.
    fn slope_sign(&self, x: f64) -> f64 {
        if x.is_infinite() {
            let d = self.dq.len() - 1;
            let lead = self.dq[d].signum();
            return if x < 0.0 && d % 2 == 1 { -lead } else { lead };
        }
        let s = sign(&self.dq, x);
        if s != 0.0 {
            s
        } else {
            sign(&self.dq, x.next_up())
        }
    }
}

/// Values of `Q` at its local maxima in the open interval `(lo, hi)`.
/// `coeffs[i]` multiplies `x^i`.
pub fn maxima_values(coeffs: &[f64], lo: f64, hi: f64, scan: &ScanConfig) -> Vec<Scaled> {
    let mut out = Vec::new();
    if coeffs.len() < 3 {
        return out;
    }
    let dq = derivative(coeffs);
    let Some(deg) = dq.iter().rposition(|&c| c != 0.0) else {
        return out;
    };
    if deg == 0 {
        return out;
    }
    let dq = dq[..=deg].to_vec();
    if deg == 1 {
        // Single critical point, a maximum iff Q' falls.
        let x = -dq[0] / dq[1];
        if dq[1] < 0.0 && lo < x && x < hi {
            out.push(eval(coeffs, x));
        }
        return out;
    }
    let (outer, inner) = root_bounds(&dq);
    let s = Sampled {
        q: coeffs,
        dq,
        n: (coeffs.len() - 1) as f64,
    };
    let ppu = scan.points_per_unit as f64;
    for p in pieces(s.n, lo, hi) {
        let t_hi = match p.family {
            Family::PosTail | Family::NegTail => s.n * (outer.unwrap_or(1.0) - 1.0),
            Family::Unit | Family::NegUnit => match inner {
                Some(r) => s.n / r - s.n,
                None => T_FALLBACK,
            },
        };
        let mut ts = vec![p.t0];
        let first = (p.t0.max(T_FLOOR).ln() * ppu).floor() as i64 + 1;
        let last = (p.t1.min(t_hi).ln() * ppu).ceil() as i64 - 1;
        if first <= last {
            let step = (1.0 / ppu).exp();
            let mut t = (first as f64 / ppu).exp();
            for _ in first..=last {
                if t > p.t0 && t < p.t1 {
                    ts.push(t);
                }
                t *= step;
            }
        }
        ts.push(p.t1);
        if !increasing(p.family) {
            ts.reverse();
        }
        let signs: Vec<f64> = ts.iter().map(|&t| s.slope_sign(s.x(p.family, t))).collect();
        for i in 1..ts.len() {
            if signs[i - 1] > 0.0 && signs[i] < 0.0 {
                let root = bisect(&s, p.family, ts[i - 1], ts[i], scan.abscissa_tol);
                out.push(eval(s.q, root));
            }
        }
    }
    out
}

/// Root of `Q'` between `t_up` (slope positive) and `t_down` (negative),
/// returned as `x`.
fn bisect(s: &Sampled, family: Family, t_up: f64, t_down: f64, tol: f64) -> f64 {
    let (mut a, mut b) = (t_up, t_down);
    if a == f64::INFINITY || b == f64::INFINITY {
        // Pull the infinite end in until the sign change is bracketed.
        let (fin, pos_at_fin) = if a.is_finite() { (a, true) } else { (b, false) };
        let mut far = fin.max(1.0) * 2.0;
        for _ in 0..2000 {
            let sg = s.slope_sign(s.x(family, far));
            if (sg > 0.0) != pos_at_fin {
                break;
            }
            far *= 2.0;
        }
        if a.is_finite() {
            b = far;
        } else {
            a = far;
        }
    }
    for _ in 0..MAX_BISECTIONS {
        let (xa, xb) = (s.x(family, a), s.x(family, b));
        let mid_x = 0.5 * (xa + xb);
        if (xb - xa).abs() <= tol * mid_x.abs().max(1.0) {
            return mid_x;
        }
        let m = 0.5 * (a + b);
        if m == a || m == b {
            return mid_x;
        }
        if s.slope_sign(s.x(family, m)) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (s.x(family, a) + s.x(family, b))
}

/// Number of local maxima in `(lo, hi)` with `Q <= u`.
pub fn count_maxima_below(coeffs: &[f64], lo: f64, hi: f64, u: f64, scan: &ScanConfig) -> usize {
    if u == f64::NEG_INFINITY {
        return 0;
    }
    maxima_values(coeffs, lo, hi, scan)
        .into_iter()
        .filter(|v| v.at_most(u))
        .count()
}
