use rice_core::quadrature::{gauss_fixed, gauss_legendre};
use rice_core::{
    expected_count, maxima_density, moments, scale_model, CountQuery, Family, PolynomialModel,
};

const TOL: f64 = 1e-10;

fn em(model: &PolynomialModel, lo: f64, hi: f64, u: f64) -> f64 {
    let q = CountQuery::new(lo, hi, u).unwrap();
    expected_count(model, &q, TOL).unwrap().value
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn finite_interval_matches_fixed_gauss() {
    let model = PolynomialModel::unit(3).unwrap();
    let rule = gauss_legendre(40);
    let direct: f64 = (0..4)
        .map(|i| {
            let a = 2.0 + 0.125 * i as f64;
            gauss_fixed(
                |x| maxima_density(&model, x, f64::INFINITY).unwrap(),
                a,
                a + 0.125,
                &rule,
            )
        })
        .sum();
    let got = em(&model, 2.0, 2.5, f64::INFINITY);
    assert!(rel(got, direct) < 1e-8, "{got} vs {direct}");
}

#[test]
fn whole_line_is_sum_of_families() {
    for n in [3usize, 8, 40] {
        let model = PolynomialModel::unit(n).unwrap();
        for u in [-0.5, 1.0, f64::INFINITY] {
            let whole = em(&model, f64::NEG_INFINITY, f64::INFINITY, u);
            let parts: f64 = Family::ALL
                .iter()
                .map(|&f| {
                    let q = CountQuery::family(f, u).unwrap();
                    expected_count(&model, &q, TOL).unwrap().value
                })
                .sum();
            assert!(rel(whole, parts) < 1e-9, "n={n} u={u}: {whole} vs {parts}");
        }
    }
}

#[test]
fn additive_over_adjacent_intervals() {
    let model = PolynomialModel::with_sigma0(0.5, vec![1.0, 0.4, 2.0, 1.0, 0.7]).unwrap();
    let cases = [
        (-2.0, 0.3, 5.0),
        (f64::NEG_INFINITY, -1.5, 0.5),
        (-0.9, 1.0, f64::INFINITY),
    ];
    for (a, b, c) in cases {
        for u in [-1.0, 0.5, f64::INFINITY] {
            let left = em(&model, a, b, u);
            let right = em(&model, b, c, u);
            let both = em(&model, a, c, u);
            assert!(rel(left + right, both) < 1e-9, "({a},{b},{c}) u={u}");
        }
    }
}

#[test]
fn nondecreasing_in_level() {
    for n in [3usize, 5, 8, 16] {
        let model = PolynomialModel::unit(n).unwrap();
        let mut last = 0.0;
        for k in 0..10 {
            let u = -4.0 + k as f64;
            let v = em(&model, f64::NEG_INFINITY, f64::INFINITY, u);
            assert!(v >= last, "n={n} u={u}");
            last = v;
        }
        assert!(em(&model, f64::NEG_INFINITY, f64::INFINITY, f64::INFINITY) >= last);
    }
}

#[test]
fn huge_level_saturates() {
    for n in [3usize, 7] {
        let model = PolynomialModel::unit(n).unwrap();
        let a2_max = (0..=40)
            .map(|i| {
                moments(&model, -2.0 + 0.1 * i as f64)
                    .map(|m| m.a2.to_f64())
                    .unwrap_or(0.0)
            })
            .fold(0.0, f64::max);
        let big = em(&model, -2.0, 2.0, 1e10 * a2_max.sqrt());
        let all = em(&model, -2.0, 2.0, f64::INFINITY);
        assert!(rel(big, all) < 1e-6);
    }
}

#[test]
fn scale_covariance() {
    for n in [3usize, 6] {
        let model = PolynomialModel::unit(n).unwrap();
        for u in [-1.0, 0.0, 0.8] {
            let base = em(&model, f64::NEG_INFINITY, f64::INFINITY, u);
            for c in [0.5, 3.0] {
                let scaled = scale_model(&model, c).unwrap();
                let v = em(&scaled, f64::NEG_INFINITY, f64::INFINITY, c * u);
                assert!(rel(v, base) < 1e-8, "n={n} u={u} c={c}: {v} vs {base}");
            }
        }
    }
}

#[test]
fn minus_infinity_level_counts_nothing() {
    let model = PolynomialModel::unit(5).unwrap();
    let q = CountQuery::whole_line(f64::NEG_INFINITY).unwrap();
    let r = expected_count(&model, &q, 1e-8).unwrap();
    assert_eq!((r.value, r.abs_error), (0.0, 0.0));
}

#[test]
fn error_estimate_is_reported() {
    let model = PolynomialModel::unit(200).unwrap();
    let q = CountQuery::family(Family::NegTail, 1.0).unwrap();
    let r = expected_count(&model, &q, 1e-9).unwrap();
    assert!(r.value > 0.0 && r.abs_error <= 1e-9 * r.value + 1e-15);
    assert!(r.evaluations > 0);
}
