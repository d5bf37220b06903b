use proptest::prelude::*;
use rice_core::{
    density_from_geometry, maxima_density, ConditionalGeometry, PolynomialModel, RiceError,
};
use rice_oracle::{conditional_value_sd, density_grid, density_oracle, exact_moments, QuadForm};

fn oracle(model: &PolynomialModel, x: f64, z: f64) -> (f64, f64) {
    let form = exact_moments(model.sigma0(), model.sigma(), x).quadratic_form();
    let u = z * conditional_value_sd(&form);
    (u, density_oracle(&form, u))
}

#[test]
fn cubic_at_one_matches_double_integral() {
    let model = PolynomialModel::unit(3).unwrap();
    let form = QuadForm::new(19.0 / 8.0, 30.5, 8.25, 4.0);
    for u in [f64::INFINITY, 0.0] {
        let want = density_oracle(&form, u);
        let got = maxima_density(&model, 1.0, u).unwrap();
        assert!(
            ((got - want) / want).abs() < 1e-8,
            "u = {u}: {got} vs {want}"
        );
    }
    assert_eq!(maxima_density(&model, 1.0, f64::NEG_INFINITY).unwrap(), 0.0);
}

#[test]
fn grid_matches_double_integral() {
    for n in [3usize, 5, 8] {
        let model = PolynomialModel::unit(n).unwrap();
        for (x, z) in density_grid() {
            let (u, want) = oracle(&model, x, z);
            let got = maxima_density(&model, x, u).unwrap();
            assert!(
                ((got - want) / want).abs() < 1e-7,
                "n={n} x={x} u={u}: {got:e} vs {want:e}"
            );
        }
    }
}

#[test]
fn general_model_matches_double_integral() {
    let model = PolynomialModel::with_sigma0(0.4, vec![1.3, 0.0, 0.7, 2.0, 0.2, 1.0]).unwrap();
    for (x, z) in density_grid() {
        let (u, want) = oracle(&model, x, z);
        let got = maxima_density(&model, x, u).unwrap();
        assert!(
            ((got - want) / want).abs() < 1e-7,
            "x={x} u={u}: {got:e} vs {want:e}"
        );
    }
}

#[test]
fn uncorrelated_form_factorises() {
    // M = 0 splits the double integral into sqrt(pi/L)(1 + erf(u sqrt L))/2
    // times 1/(2K), over (2 pi)^(3/2) sqrt(det).
    let (k, l, det) = (1.7, 0.45, 3.2);
    let form = QuadForm::new(k, l, 0.0, det);
    let geo = ConditionalGeometry {
        g1: 1.0 / (2.0 * k * (2.0 * l * det).sqrt()),
        ln_sd_value: -(2.0 * l).sqrt().ln(),
        rho: 0.0,
        one_minus_rho2: 1.0,
    };
    let norm = (2.0 * std::f64::consts::PI).powf(1.5) * det.sqrt();
    for u in [-2.0, -0.3, 0.0, 1.1, f64::INFINITY] {
        let erf = if u.is_infinite() {
            1.0
        } else {
            libm_erf(u * l.sqrt())
        };
        let want = (std::f64::consts::PI / l).sqrt() * 0.5 * (1.0 + erf) / (2.0 * k) / norm;
        let a = density_from_geometry(&geo, u);
        let b = density_oracle(&form, u);
        assert!(((a - want) / want).abs() < 1e-10, "closed form at u={u}");
        assert!(((b - want) / want).abs() < 1e-10, "oracle at u={u}");
    }
}

// erf by its Maclaurin series; adequate for |z| < 2.
fn libm_erf(z: f64) -> f64 {
    let mut term = z;
    let mut sum = z;
    for k in 1..200 {
        term *= -z * z / k as f64;
        sum += term / (2 * k + 1) as f64;
    }
    sum * 2.0 / std::f64::consts::PI.sqrt()
}

#[test]
fn quadratic_is_rejected() {
    let model = PolynomialModel::unit(2).unwrap();
    assert!(matches!(
        maxima_density(&model, 1.0, 0.0),
        Err(RiceError::DegenerateCovariance { .. })
    ));
}

#[test]
fn continuous_through_zero_with_no_constant_term() {
    // Q(0) = 0, so for u > 0 every maximum close to 0 counts.
    let model = PolynomialModel::unit(6).unwrap();
    for u in [1.0, f64::INFINITY] {
        let a = maxima_density(&model, 1e-9, u).unwrap();
        let b = maxima_density(&model, 1e-6, u).unwrap();
        let c = maxima_density(&model, -1e-6, u).unwrap();
        assert!(a.is_finite() && a > 0.0);
        assert!(
            ((a - b) / a).abs() < 1e-4 && ((a - c) / a).abs() < 1e-4,
            "u={u}"
        );
    }
    // At u = 0 the density vanishes quadratically.
    let f = |x: f64| maxima_density(&model, x, 0.0).unwrap();
    assert!((f(1e-3) / f(2e-3) - 0.25).abs() < 1e-2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn nonnegative_and_monotone_in_level(
        n in 3usize..20,
        x in -6.0f64..6.0,
        u1 in -50.0f64..50.0,
        du in 0.0f64..20.0,
    ) {
        let model = PolynomialModel::unit(n).unwrap();
        let f1 = maxima_density(&model, x, u1);
        prop_assume!(f1.is_ok());
        let f1 = f1.unwrap();
        let f2 = maxima_density(&model, x, u1 + du).unwrap();
        let all = maxima_density(&model, x, f64::INFINITY).unwrap();
        prop_assert!(f1 >= 0.0);
        prop_assert!(f2 >= f1 * (1.0 - 1e-12));
        prop_assert!(all >= f2 * (1.0 - 1e-12));
    }
}
