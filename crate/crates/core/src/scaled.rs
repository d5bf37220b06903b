//! Floating values with an extended binary exponent.
//!
//! `x^(2n)` leaves the `f64` range long before the Rice density does, so the
//! covariance moments are carried as `mantissa * 2^exponent`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `mantissa * 2^exponent` with `|mantissa|` in `[1, 2)`, or exactly zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledValue {
    mantissa: f64,
    exponent: i64,
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue {
        mantissa: 0.0,
        exponent: 0,
    };
    pub const ONE: ScaledValue = ScaledValue {
        mantissa: 1.0,
        exponent: 0,
    };

    pub fn new(mantissa: f64, exponent: i64) -> Self {
        if mantissa == 0.0 || !mantissa.is_finite() {
            return ScaledValue {
                mantissa: if mantissa == 0.0 { 0.0 } else { mantissa },
                exponent: 0,
            };
        }
        let (m, e) = libm::frexp(mantissa);
        ScaledValue {
            mantissa: 2.0 * m,
            exponent: exponent + i64::from(e) - 1,
        }
    }

    pub fn from_f64(value: f64) -> Self {
        Self::new(value, 0)
    }

    pub fn mantissa(self) -> f64 {
        self.mantissa
    }

    pub fn exponent(self) -> i64 {
        self.exponent
    }

    /// Saturates to `±inf` or `±0` outside the `f64` range.
    pub fn to_f64(self) -> f64 {
        if self.mantissa == 0.0 || !self.mantissa.is_finite() {
            return self.mantissa;
        }
        let e = self.exponent.clamp(-2200, 2200) as i32;
        libm::ldexp(self.mantissa, e)
    }

    pub fn is_zero(self) -> bool {
        self.mantissa == 0.0
    }

    pub fn signum(self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    pub fn abs(self) -> Self {
        ScaledValue {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Natural log of the absolute value.
    pub fn ln_abs(self) -> f64 {
        self.mantissa.abs().ln() + self.exponent as f64 * std::f64::consts::LN_2
    }

    pub fn sqrt(self) -> Self {
        debug_assert!(self.mantissa >= 0.0);
        if self.exponent % 2 == 0 {
            Self::new(self.mantissa.sqrt(), self.exponent / 2)
        } else {
            Self::new((2.0 * self.mantissa).sqrt(), (self.exponent - 1) / 2)
        }
    }

    /// `base^k` by repeated squaring, renormalising after every product.
    pub fn powi(base: f64, k: i64) -> Self {
        if k < 0 {
            return Self::ONE / Self::powi(base, -k);
        }
        let mut acc = Self::ONE;
        let mut sq = Self::from_f64(base);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * sq;
            }
            sq = sq * sq;
            k >>= 1;
        }
        acc
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }
}

impl Default for ScaledValue {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<f64> for ScaledValue {
    fn from(value: f64) -> Self {
        Self::from_f64(value)
    }
}

impl Mul for ScaledValue {
    type Output = ScaledValue;
    fn mul(self, rhs: ScaledValue) -> ScaledValue {
        ScaledValue::new(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Div for ScaledValue {
    type Output = ScaledValue;
    fn div(self, rhs: ScaledValue) -> ScaledValue {
        ScaledValue::new(self.mantissa / rhs.mantissa, self.exponent - rhs.exponent)
    }
}

impl Neg for ScaledValue {
    type Output = ScaledValue;
    fn neg(self) -> ScaledValue {
        ScaledValue {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Add for ScaledValue {
    type Output = ScaledValue;
    fn add(self, rhs: ScaledValue) -> ScaledValue {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (hi, lo) = if self.exponent >= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = hi.exponent - lo.exponent;
        if shift > 1100 {
            return hi;
        }
        let m = hi.mantissa + libm::ldexp(lo.mantissa, -(shift as i32));
        ScaledValue::new(m, hi.exponent)
    }
}

impl Sub for ScaledValue {
    type Output = ScaledValue;
    fn sub(self, rhs: ScaledValue) -> ScaledValue {
        self + (-rhs)
    }
}

impl PartialOrd for ScaledValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = *self - *other;
        if d.mantissa.is_nan() {
            None
        } else {
            d.mantissa.partial_cmp(&0.0)
        }
    }
}

impl fmt::Display for ScaledValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_f64();
        if v.is_finite() && (v == 0.0 || v.abs() > 1e-300) {
            write!(f, "{v:e}")
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exponent)
        }
    }
}
