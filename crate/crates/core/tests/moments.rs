use proptest::prelude::*;
use rice_core::{moments, scale_model, PolynomialModel, RiceError, ScaledValue};
use rice_oracle::exact_moments;

fn rel_close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol * want.abs().max(1e-300)
}

const POINTS: [f64; 8] = [0.5, -0.5, 0.9, -0.9, 1.0, -1.0, 1.1, -1.1];

fn check_against_oracle(model: &PolynomialModel, x: f64) {
    let m = moments(model, x).unwrap();
    let e = exact_moments(model.sigma0(), model.sigma(), x);
    let pairs = [
        (m.a2, e.get(0, 0)),
        (m.b2, e.get(1, 1)),
        (m.d2, e.get(2, 2)),
        (m.c, e.get(0, 1)),
        (m.e, e.get(0, 2)),
        (m.f, e.get(1, 2)),
    ];
    for (i, (got, want)) in pairs.into_iter().enumerate() {
        assert!(
            rel_close(got.to_f64(), want, 1e-10),
            "moment {i} at n={} x={x}",
            model.degree()
        );
    }
    let form = e.quadratic_form();
    let n = model.degree();
    assert!(
        rel_close(m.det_sigma.to_f64(), form.det, 1e-10),
        "det at n={n} x={x}"
    );
    assert!(rel_close(m.k, form.k, 1e-10), "K at n={n} x={x}");
    assert!(rel_close(m.l, form.l, 1e-10), "L at n={n} x={x}");
    assert!(
        rel_close(m.m, form.m, 1e-9),
        "M at n={n} x={x}: {} vs {}",
        m.m,
        form.m
    );
    let s_printed = form.k - form.m * form.m / (4.0 * form.l);
    assert!(rel_close(m.s, s_printed, 1e-10));
    assert!(rel_close(m.s_completed(), e.s_completed(), 1e-10));
}

#[test]
fn unit_models_match_exact_arithmetic() {
    for n in 3..=12 {
        let model = PolynomialModel::unit(n).unwrap();
        for x in POINTS {
            check_against_oracle(&model, x);
        }
    }
}

#[test]
fn general_models_match_exact_arithmetic() {
    let models = [
        PolynomialModel::with_sigma0(0.7, vec![1.0, 2.0, 0.5, 1.5]).unwrap(),
        PolynomialModel::new(vec![0.3, 0.0, 1.7, 0.0, 2.2, 0.9, 1.1]).unwrap(),
        PolynomialModel::with_sigma0(1.0, (1..=12).map(|k| 1.0 / k as f64).collect()).unwrap(),
    ];
    for model in &models {
        for x in POINTS.iter().copied().chain([0.01, -0.2, 3.0, -7.5]) {
            check_against_oracle(model, x);
        }
    }
}

#[test]
fn quintic_determinant_agrees_where_it_is_accurate() {
    let model = PolynomialModel::unit(5).unwrap();
    for x in [0.6, -0.8, 1.0] {
        let m = moments(&model, x).unwrap();
        assert!(rel_close(
            m.det_quintic().to_f64(),
            m.det_sigma.to_f64(),
            1e-6
        ));
    }
}

#[test]
fn two_positive_deviations_are_degenerate_everywhere() {
    let models = [
        PolynomialModel::new(vec![1.0, 0.0, 0.0, 2.0]).unwrap(),
        PolynomialModel::with_sigma0(1.0, vec![0.0, 0.0, 0.5]).unwrap(),
        PolynomialModel::unit(2).unwrap(),
    ];
    for model in &models {
        for x in [-3.0, -1.0, -0.4, 0.2, 1.0, 1.3, 40.0] {
            assert!(matches!(
                moments(model, x),
                Err(RiceError::DegenerateCovariance { .. })
            ));
        }
    }
}

#[test]
fn overflow_safe_for_large_degree() {
    for n in [1_000usize, 100_000, 1_000_000] {
        let model = PolynomialModel::unit(n).unwrap();
        let nf = n as f64;
        for x in [1.0 + 50.0 / nf, -1.0 - 50.0 / nf, 1.0, -1.0, 0.999] {
            let m = moments(&model, x).unwrap();
            for v in [m.a2, m.b2, m.d2, m.det_sigma] {
                assert!(v.ln_abs().is_finite() && v.signum() > 0.0);
            }
            assert!(
                m.k > 0.0 && m.l > 0.0 && m.s_completed() > 0.0,
                "n={n} x={x}"
            );
        }
    }
}

fn sigma_strategy() -> impl Strategy<Value = (f64, Vec<f64>)> {
    (0.0f64..2.0, prop::collection::vec(0.05f64..3.0, 3..14))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn covariance_is_positive((s0, sigma) in sigma_strategy(), x in -3.0f64..3.0) {
        let model = PolynomialModel::with_sigma0(s0, sigma).unwrap();
        let m = moments(&model, x);
        prop_assume!(m.is_ok());
        let m = m.unwrap();
        let cs = |p: ScaledValue, q: ScaledValue, c: ScaledValue| {
            (c * c).to_f64() <= (p * q).to_f64() * (1.0 + 1e-9)
        };
        prop_assert!(m.a2.signum() > 0.0 && m.b2.signum() > 0.0 && m.d2.signum() > 0.0);
        prop_assert!(cs(m.a2, m.b2, m.c));
        prop_assert!(cs(m.a2, m.d2, m.e));
        prop_assert!(cs(m.b2, m.d2, m.f));
        let scale = m.a2 * m.b2 * m.d2;
        prop_assert!(m.det_sigma.to_f64() >= -1e-12 * scale.to_f64());
        prop_assert!(m.k > 0.0 && m.l > 0.0 && m.s > 0.0 && m.s_completed() > 0.0);
    }

    #[test]
    fn scale_covariance((s0, sigma) in sigma_strategy(), x in -2.0f64..2.0) {
        let model = PolynomialModel::with_sigma0(s0, sigma).unwrap();
        let base = moments(&model, x);
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        for c in [0.5f64, 3.0] {
            let m = moments(&scale_model(&model, c).unwrap(), x).unwrap();
            let c2 = ScaledValue::from_f64(c * c);
            let pairs = [
                (m.a2, base.a2 * c2), (m.b2, base.b2 * c2), (m.d2, base.d2 * c2),
                (m.c, base.c * c2), (m.e, base.e * c2), (m.f, base.f * c2),
                (m.det_sigma, base.det_sigma * c2 * c2 * c2),
            ];
            for (got, want) in pairs {
                prop_assert!(rel_close(got.to_f64(), want.to_f64(), 1e-12)
                    || (got - want).abs().to_f64() <= 1e-12 * (m.a2 * m.b2).sqrt().to_f64());
            }
            let inv = 1.0 / (c * c);
            prop_assert!(rel_close(m.k, base.k * inv, 1e-10));
            prop_assert!(rel_close(m.l, base.l * inv, 1e-10));
            prop_assert!((m.m - base.m * inv).abs() <= 1e-10 * (m.k * m.l).sqrt());
            prop_assert!(rel_close(m.s, base.s * inv, 1e-10));
        }
    }
}
