//! Brute-force references for the test suites. Nothing here is fast.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub type Q = BigRational;

fn rat(v: f64) -> Q {
    BigRational::from_float(v).expect("finite value")
}

/// Covariance of `(Q, Q', Q'')` at `x` in exact rational arithmetic, built
/// as `P C P^T` from the explicit map `P` taking the coefficients `A_0..A_n`
/// to `(Q, Q', Q'')` and the covariance `C_ij = sum_{k <= min(i,j)} sigma_k^2`
/// of the partial sums.
pub struct ExactMoments {
    pub cov: [[Q; 3]; 3],
}

pub fn exact_moments(sigma0: f64, sigma: &[f64], x: f64) -> ExactMoments {
    let n = sigma.len();
    let x = rat(x);
    let var: Vec<Q> = std::iter::once(sigma0)
        .chain(sigma.iter().copied())
        .map(|s| rat(s) * rat(s))
        .collect();
    let mut cum = vec![Q::zero(); n + 1];
    let mut acc = Q::zero();
    for (j, v) in var.iter().enumerate() {
        acc += v;
        cum[j] = acc.clone();
    }

    let mut pow = vec![Q::from_integer(BigInt::from(1)); n + 1];
    for j in 1..=n {
        pow[j] = &pow[j - 1] * &x;
    }
    let mut p: [Vec<Q>; 3] = [
        vec![Q::zero(); n + 1],
        vec![Q::zero(); n + 1],
        vec![Q::zero(); n + 1],
    ];
    for j in 0..=n {
        let jq = Q::from_integer(BigInt::from(j));
        p[0][j] = pow[j].clone();
        if j >= 1 {
            p[1][j] = &jq * &pow[j - 1];
        }
        if j >= 2 {
            p[2][j] = &jq * Q::from_integer(BigInt::from(j - 1)) * &pow[j - 2];
        }
    }

    let cov = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let mut s = Q::zero();
            for i in 0..=n {
                if p[a][i].is_zero() {
                    continue;
                }
                for j in 0..=n {
                    if !p[b][j].is_zero() {
                        s += &p[a][i] * &p[b][j] * &cum[i.min(j)];
                    }
                }
            }
            s
        })
    });
    ExactMoments { cov }
}

impl ExactMoments {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.cov[i][j].to_f64().unwrap()
    }

    pub fn det(&self) -> Q {
        let c = &self.cov;
        &c[0][0] * (&c[1][1] * &c[2][2] - &c[1][2] * &c[2][1])
            - &c[0][1] * (&c[1][0] * &c[2][2] - &c[1][2] * &c[2][0])
            + &c[0][2] * (&c[1][0] * &c[2][1] - &c[1][1] * &c[2][0])
    }

    /// `K - M^2 / L`, which reduces to `B2 / (2 (B2 D2 - F^2))`.
    pub fn s_completed(&self) -> f64 {
        let c = &self.cov;
        let two = Q::from_integer(BigInt::from(2));
        (&c[1][1] / (two * (&c[1][1] * &c[2][2] - &c[1][2] * &c[1][2])))
            .to_f64()
            .unwrap()
    }

    /// Half the `(Q, Q'')` block of the inverse covariance, as
    /// `(K, L, M)` in `exp(-L r^2 - 2 M r t - K t^2)`.
    pub fn quadratic_form(&self) -> QuadForm {
        let c = &self.cov;
        let det = self.det();
        let two = Q::from_integer(BigInt::from(2));
        let l = (&c[1][1] * &c[2][2] - &c[1][2] * &c[1][2]) / (&two * &det);
        let k = (&c[0][0] * &c[1][1] - &c[0][1] * &c[0][1]) / (&two * &det);
        let m = (&c[0][1] * &c[1][2] - &c[0][2] * &c[1][1]) / (&two * &det);
        let gap = &l * &k - &m * &m;
        QuadForm {
            k: k.to_f64().unwrap(),
            l: l.to_f64().unwrap(),
            m: m.to_f64().unwrap(),
            det: det.to_f64().unwrap(),
            gap: gap.to_f64().unwrap(),
        }
    }
}

/// Conditional Gaussian of `(Q, Q'')` given `Q' = 0`, as the exponent
/// `-L r^2 - 2 M r t - K t^2` and the full determinant.
#[derive(Clone, Copy, Debug)]
pub struct QuadForm {
    pub k: f64,
    pub l: f64,
    pub m: f64,
    pub det: f64,
    /// `LK - M^2`, kept separately because it cancels.
    pub gap: f64,
}

impl QuadForm {
    pub fn new(k: f64, l: f64, m: f64, det: f64) -> Self {
        QuadForm {
            k,
            l,
            m,
            det,
            gap: l * k - m * m,
        }
    }
}

const GL_NODES: [f64; 5] = [
    0.148_874_338_981_631_2,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];
const GL_WEIGHTS: [f64; 5] = [
    0.295_524_224_714_752_9,
    0.269_266_719_309_996_4,
    0.219_086_362_515_982_0,
    0.149_451_349_150_580_6,
    0.066_671_344_308_688_1,
];

fn gl10<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = 0.0;
    for (x, w) in GL_NODES.iter().zip(GL_WEIGHTS) {
        s += w * (f(c - h * x) + f(c + h * x));
    }
    s * h
}

fn refine<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let left = gl10(f, a, m);
    let right = gl10(f, m, b);
    let diff = (left + right - whole).abs();
    let size = left.abs() + right.abs();
    if depth == 0 || diff <= tol || diff <= 64.0 * f64::EPSILON * size || size < 1e-280 {
        return left + right;
    }
    refine(f, a, m, left, 0.5 * tol, depth - 1) + refine(f, m, b, right, 0.5 * tol, depth - 1)
}

/// Recursive bisection of a 10-point Gauss-Legendre rule down to absolute
/// tolerance `tol`.
pub fn adaptive_gl<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let whole = gl10(&mut f, a, b);
    refine(&mut f, a, b, whole, tol, 18)
}

/// As [`adaptive_gl`] with a tolerance relative to a 16-panel first guess.
pub fn adaptive_gl_rel<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, rel: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let h = (b - a) / 16.0;
    let panels: Vec<f64> = (0..16)
        .map(|i| gl10(&mut f, a + i as f64 * h, a + (i + 1) as f64 * h))
        .collect();
    let tol = rel * panels.iter().map(|v| v.abs()).sum::<f64>() / 16.0;
    panels
        .iter()
        .enumerate()
        .map(|(i, &v)| refine(&mut f, a + i as f64 * h, a + (i + 1) as f64 * h, v, tol, 18))
        .sum()
}

/// `int_{-inf}^u int_{-inf}^0 |t| p(r, 0, t) dt dr` by nested quadrature of
/// the raw trivariate normal density, each direction truncated at 12
/// conditional standard deviations.
pub fn density_oracle(form: &QuadForm, u: f64) -> f64 {
    if u == f64::NEG_INFINITY {
        return 0.0;
    }
    let QuadForm { l, m, det, gap, .. } = *form;
    let norm = (2.0 * std::f64::consts::PI).powf(1.5) * det.sqrt();
    let sd_t = (l / (2.0 * gap)).sqrt();
    let sd_r = (1.0 / (2.0 * l)).sqrt();
    let inner = |t: f64| {
        let mu = -m * t / l;
        let hi = u.min(mu + 12.0 * sd_r);
        let lo = hi.min(mu) - 12.0 * sd_r;
        let g = |r: f64| (-(l * (r - mu) * (r - mu) + gap / l * t * t)).exp();
        t.abs() * adaptive_gl_rel(g, lo, hi, 1e-13)
    };
    // With M > 0 the conditional mean of r grows as t falls, so r <= u is
    // out of reach beyond the point where it sits 12 deviations above u.
    let mut t_lo = -14.0 * sd_t;
    if m > 0.0 && u.is_finite() {
        let cut = -(u + 12.0 * sd_r) * l / m;
        if cut >= 0.0 {
            return 0.0;
        }
        t_lo = t_lo.max(cut);
    }
    adaptive_gl_rel(inner, t_lo, 0.0, 1e-10) / norm
}

/// Standard deviation of `Q` given `Q' = 0` and `Q''`.
pub fn conditional_value_sd(form: &QuadForm) -> f64 {
    (1.0 / (2.0 * form.l)).sqrt()
}

/// Twenty `(x, z)` pairs covering all four pieces of the line and their
/// boundaries; the level is `u = z * conditional_value_sd`.
pub fn density_grid() -> Vec<(f64, f64)> {
    const XS: [f64; 20] = [
        -25.0, -3.0, -1.4, -1.02, -1.0, -0.98, -0.7, -0.35, -0.04, 1e-4, 0.03, 0.4, 0.75, 0.97,
        1.0, 1.03, 1.5, 4.0, 25.0, 200.0,
    ];
    const ZS: [f64; 6] = [-2.0, -0.7, 0.0, 0.6, 1.8, f64::INFINITY];
    XS.iter()
        .enumerate()
        .map(|(i, &x)| (x, ZS[i % ZS.len()]))
        .collect()
}
