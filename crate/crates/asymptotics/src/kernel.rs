//! The sixteen boundary-layer kernels `H_fi(t)`.
//!
//! Every kernel is `coef * t^(p/2) * prod B_j(t)^(h_j/2)` where each bracket
//! `B_j` is a finite sum `sum c t^k e^(r t)` with rational `c`. Brackets vanish
//! to high order at `t = 0`, so near the origin they are evaluated from an
//! exactly computed Taylor series.

#[path = "table.rs"]
mod table;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rice_core::{Result, RiceError};

pub(crate) struct Term {
    /// Rate above the bracket's `shift`.
    pub rate: u32,
    pub tpow: u32,
    pub num: i64,
    pub den: i64,
}

pub(crate) struct BracketDef {
    #[allow(dead_code)]
    pub name: &'static str,
    /// Smallest rate; the stored terms are multiplied by `e^(shift t)`.
    pub shift: i32,
    pub terms: &'static [Term],
}

pub(crate) struct KernelDef {
    pub family: u8,
    pub index: u8,
    pub coef: f64,
    pub t_half_pow: i32,
    /// `(bracket, h)` with the bracket raised to `h/2`. Factors with odd `h`
    /// form the radicand.
    pub factors: &'static [(usize, i32)],
    /// Return `|H|`; the printed form is a square root of a square.
    pub magnitude: bool,
}

const SERIES_TERMS: usize = 256;
/// Past this the shifted Taylor series is never better than direct sums.
const SERIES_MAX_T: f64 = 8.0;
/// Condition number beyond which a bracket value is considered lost.
const MAX_CONDITION: f64 = 1e12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelId {
    family: u8,
    index: u8,
}

impl KernelId {
    pub fn new(family: u8, index: u8) -> Result<Self> {
        if (1..=4).contains(&family) && (1..=4).contains(&index) {
            Ok(KernelId { family, index })
        } else {
            Err(RiceError::InvalidQuery(format!(
                "no kernel H{family}{index}"
            )))
        }
    }

    pub fn family(self) -> u8 {
        self.family
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn all() -> impl Iterator<Item = KernelId> {
        (1..=4).flat_map(|f| {
            (1..=4).map(move |i| KernelId {
                family: f,
                index: i,
            })
        })
    }

    fn def(self) -> &'static KernelDef {
        let k = &table::KERNELS[4 * (self.family as usize - 1) + self.index as usize - 1];
        debug_assert!(k.family == self.family && k.index == self.index);
        k
    }
}

impl fmt::Display for KernelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}{}", self.family, self.index)
    }
}

/// Taylor coefficients of a bracket with its shift removed.
struct Series {
    coeffs: Vec<f64>,
    max_rate: f64,
}

fn build_series(def: &BracketDef) -> Series {
    let max_rate = def.terms.iter().map(|t| t.rate).max().unwrap_or(0);
    // a_j j! D = sum (c D) r^(j-k) j!/(j-k)!, all integers for D = lcm of denominators.
    let lcm = def.terms.iter().fold(BigInt::one(), |acc, t| {
        num_integer_lcm(&acc, &BigInt::from(t.den))
    });
    let scaled: Vec<BigInt> = def
        .terms
        .iter()
        .map(|t| BigInt::from(t.num) * (&lcm / BigInt::from(t.den)))
        .collect();
    let mut powers: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..=max_rate {
        let mut row = Vec::with_capacity(SERIES_TERMS);
        let mut p = BigInt::one();
        for _ in 0..SERIES_TERMS {
            row.push(p.clone());
            p *= r;
        }
        powers.push(row);
    }
    let mut coeffs = Vec::with_capacity(SERIES_TERMS);
    let mut factorial = BigInt::one();
    for j in 0..SERIES_TERMS {
        if j > 0 {
            factorial *= j;
        }
        let mut acc = BigInt::zero();
        for (t, c) in def.terms.iter().zip(&scaled) {
            let k = t.tpow as usize;
            if k > j {
                continue;
            }
            let falling: u64 = ((j - k + 1)..=j).map(|v| v as u64).product();
            acc += c * &powers[t.rate as usize][j - k] * falling;
        }
        let a = BigRational::new(acc, &factorial * &lcm);
        coeffs.push(a.to_f64().unwrap_or(0.0));
    }
    Series {
        coeffs,
        max_rate: max_rate as f64,
    }
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

fn series_table() -> &'static [Series] {
    static SERIES: OnceLock<Vec<Series>> = OnceLock::new();
    SERIES.get_or_init(|| table::BRACKETS.iter().map(build_series).collect())
}

/// `value = mantissa * e^(rate t)`.
#[derive(Clone, Copy, Debug)]
struct Shifted {
    rate: i32,
    mantissa: f64,
}

fn eval_series(s: &Series, t: f64) -> (f64, f64) {
    let mut sum = 0.0;
    let mut abs = 0.0;
    let mut tp = 1.0;
    let tail_start = 2.0 * t * s.max_rate + 4.0;
    for (j, &a) in s.coeffs.iter().enumerate() {
        let term = a * tp;
        sum += term;
        abs += term.abs();
        // Past j ~ t * rate the terms fall off at least geometrically.
        if j as f64 > tail_start && term.abs() < 1e-19 * abs {
            break;
        }
        tp *= t;
    }
    (sum, abs)
}

fn eval_bracket(idx: usize, t: f64) -> Result<Shifted> {
    let def = &table::BRACKETS[idx];
    let top = def.terms.iter().map(|t| t.rate).max().unwrap_or(0);
    let mut sum = 0.0;
    let mut abs = 0.0;
    for term in def.terms {
        let v = term.num as f64 / term.den as f64
            * t.powi(term.tpow as i32)
            * ((term.rate as f64 - top as f64) * t).exp();
        sum += v;
        abs += v.abs();
    }
    let mut best = Shifted {
        rate: def.shift + top as i32,
        mantissa: sum,
    };
    let mut cond = abs / sum.abs();
    if t <= SERIES_MAX_T {
        let (s, a) = eval_series(&series_table()[idx], t);
        let c = a / s.abs();
        if c < cond || !cond.is_finite() {
            cond = c;
            best = Shifted {
                rate: def.shift,
                mantissa: s,
            };
        }
    }
    if cond.is_finite() && cond < MAX_CONDITION && best.mantissa.is_finite() {
        Ok(best)
    } else {
        Err(RiceError::NonFinite("kernel bracket"))
    }
}

/// `H_id(t)` for `t > 0`.
pub fn h_kernel(id: KernelId, t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(RiceError::InvalidQuery(format!(
            "kernel argument must be positive, got {t}"
        )));
    }
    let def = id.def();
    // Work with ln|value|, an exact half-integer rate and a sign.
    let mut half_rate: i64 = 0;
    let mut ln_abs = def.coef.abs().ln() + 0.5 * def.t_half_pow as f64 * t.ln();
    let mut negative = def.coef < 0.0;
    let mut radicand_negative = false;
    for &(b, h) in def.factors {
        let v = eval_bracket(b, t)?;
        if v.mantissa == 0.0 {
            return Err(RiceError::NonFinite("kernel bracket vanished"));
        }
        half_rate += h as i64 * v.rate as i64;
        ln_abs += 0.5 * h as f64 * v.mantissa.abs().ln();
        if v.mantissa < 0.0 {
            if h % 2 == 0 {
                negative = !negative;
            } else {
                radicand_negative = !radicand_negative;
            }
        }
    }
    if radicand_negative && !def.magnitude {
        return Err(RiceError::NonFinite("negative kernel radicand"));
    }
    let value = (ln_abs + 0.5 * half_rate as f64 * t).exp();
    if !value.is_finite() {
        return Err(RiceError::NonFinite("kernel value"));
    }
    Ok(if negative && !def.magnitude {
        -value
    } else {
        value
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        assert_eq!(KernelId::all().count(), 16);
        for id in KernelId::all() {
            assert_eq!(id.def().family, id.family());
            assert_eq!(id.def().index, id.index());
        }
        assert!(KernelId::new(0, 1).is_err());
        assert!(KernelId::new(2, 5).is_err());
        assert_eq!(KernelId::new(3, 4).unwrap().to_string(), "H34");
    }

    #[test]
    fn series_and_direct_agree_where_both_are_good() {
        for idx in 0..table::BRACKETS.len() {
            let def = &table::BRACKETS[idx];
            let top = def.terms.iter().map(|t| t.rate).max().unwrap() as f64;
            let t = 3.0;
            let (s, _) = eval_series(&series_table()[idx], t);
            let direct: f64 = def
                .terms
                .iter()
                .map(|x| {
                    x.num as f64 / x.den as f64 * t.powi(x.tpow as i32) * (x.rate as f64 * t).exp()
                })
                .sum();
            let scale: f64 = def
                .terms
                .iter()
                .map(|x| {
                    (x.num as f64 / x.den as f64 * t.powi(x.tpow as i32)).abs() * (top * t).exp()
                })
                .sum();
            assert!((s - direct).abs() < 1e-12 * scale, "{}", def.name);
        }
    }

    #[test]
    fn rejects_nonpositive_argument() {
        let id = KernelId::new(1, 1).unwrap();
        assert!(h_kernel(id, 0.0).is_err());
        assert!(h_kernel(id, -1.0).is_err());
        assert!(h_kernel(id, f64::NAN).is_err());
    }
}
