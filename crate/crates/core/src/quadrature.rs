//! Adaptive Gauss-Kronrod (7/15) integration and fixed Gauss-Legendre rules.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::error::{Result, RiceError};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
/// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod estimate and `|K15 - G7|`.
pub fn gk15<F>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let dx = h * XGK[i];
        let pair = f(c - dx)? + f(c + dx)?;
        k += WGK[i] * pair;
        if i % 2 == 1 {
            g += WG[i / 2] * pair;
        }
    }
    let (k, g) = (k * h, g * h);
    if !k.is_finite() {
        return Err(RiceError::NonFinite("quadrature panel"));
    }
    Ok((k, (k - g).abs()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl QuadOptions {
    pub fn new(abs_tol: f64, rel_tol: f64, max_panels: usize) -> Self {
        QuadOptions {
            abs_tol,
            rel_tol,
            max_panels,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub panels: usize,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Clone, Copy, Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

// Largest error first; ties broken by position so the subdivision tree is
// reproducible.
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

/// Globally adaptive bisection over `[a, b]`. Never evaluates the endpoints.
/// Running out of panels is reported through `converged`, not as an error.
pub fn try_integrate<F>(mut f: F, a: f64, b: f64, opts: QuadOptions) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            abs_error: 0.0,
            panels: 0,
            evaluations: 0,
            converged: true,
        });
    }
    let (value, error) = gk15(&mut f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, error });
    let mut done: Vec<Panel> = Vec::new();
    let mut total = value;
    let mut total_err = error;
    let mut evaluations = 15;
    let target = |v: f64| opts.abs_tol.max(opts.rel_tol * v.abs());

    while total_err > target(total) && heap.len() + done.len() < opts.max_panels {
        let Some(p) = heap.pop() else { break };
        let mid = 0.5 * (p.a + p.b);
        if !(p.a < mid && mid < p.b) {
            done.push(p);
            continue;
        }
        let (v1, e1) = gk15(&mut f, p.a, mid)?;
        let (v2, e2) = gk15(&mut f, mid, p.b)?;
        evaluations += 30;
        total += v1 + v2 - p.value;
        total_err += e1 + e2 - p.error;
        heap.push(Panel {
            a: p.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Panel {
            a: mid,
            b: p.b,
            value: v2,
            error: e2,
        });
    }

    let mut panels: Vec<Panel> = heap.into_vec();
    panels.extend(done);
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value: f64 = panels.iter().map(|p| p.value).sum();
    let abs_error: f64 = panels.iter().map(|p| p.error).sum();
    Ok(QuadResult {
        value,
        abs_error,
        panels: panels.len(),
        evaluations,
        converged: abs_error <= target(value),
    })
}

pub fn integrate<F>(mut f: F, a: f64, b: f64, opts: QuadOptions) -> QuadResult
where
    F: FnMut(f64) -> f64,
{
    try_integrate(|x| Ok(f(x)), a, b, opts).expect("infallible integrand")
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..(n + 1) / 2 {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { z } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = nf * (z * pn - pm) / (z * z - 1.0);
            let step = pn / dp;
            z -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

pub(crate) fn gauss_legendre_20() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(20))
}

/// Fixed-order Gauss-Legendre over `[a, b]`.
pub fn gauss_fixed<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rule: &(Vec<f64>, Vec<f64>),
) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    rule.0
        .iter()
        .zip(&rule.1)
        .map(|(x, w)| w * f(c + h * x))
        .sum::<f64>()
        * h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_exact_to_degree_22_gauss_to_13() {
        let mut f = |x: f64| Ok(x.powi(22) + x.powi(13));
        let (k, _) = gk15(&mut f, -1.0, 1.0).unwrap();
        assert!((k - 2.0 / 23.0).abs() < 1e-15);
        let mut g = |x: f64| Ok(x.powi(12) + x.powi(11));
        let (k, e) = gk15(&mut g, 0.0, 1.0).unwrap();
        assert!((k - (1.0 / 13.0 + 1.0 / 12.0)).abs() < 1e-15);
        assert!(e < 1e-15);
        let mut h = |x: f64| Ok(x.powi(14));
        let (_, e) = gk15(&mut h, -1.0, 1.0).unwrap();
        assert!(e > 1e-6);
    }

    #[test]
    fn weights_sum_to_interval() {
        let kron: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        let gauss: f64 = 2.0 * WG[..3].iter().sum::<f64>() + WG[3];
        assert!((kron - 2.0).abs() < 1e-15);
        assert!((gauss - 2.0).abs() < 1e-15);
    }

    #[test]
    fn legendre_rules() {
        let rule = gauss_legendre(20);
        assert!((rule.1.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let v = gauss_fixed(|x| x.powi(38), -1.0, 1.0, &rule);
        assert!((v - 2.0 / 39.0).abs() < 1e-15);
        let three = gauss_legendre(3);
        assert!((three.0[2] - 0.6f64.sqrt()).abs() < 1e-15);
        assert!((three.1[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn adaptive_endpoint_singularity() {
        let r = integrate(
            |x| 1.0 / x.sqrt(),
            0.0,
            1.0,
            QuadOptions::new(0.0, 1e-10, 2000),
        );
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = integrate(
            |x| (1.0 / x).sin(),
            1e-6,
            1.0,
            QuadOptions::new(0.0, 1e-14, 5),
        );
        assert!(!r.converged);
        assert_eq!(r.panels, 5);
    }

    #[test]
    fn non_finite_is_an_error() {
        let r = try_integrate(|_| Ok(f64::NAN), 0.0, 1.0, QuadOptions::new(0.0, 1e-8, 10));
        assert!(r.is_err());
    }
}
