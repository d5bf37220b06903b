use std::f64::consts::PI;

use proptest::prelude::*;
use rice_asymptotics::reference::log_integral_by_quadrature;
use rice_asymptotics::{coefficients, h_integral, log_term, theorem_expansion, LogPower, Selector};
use rice_core::Family;

#[test]
fn log_term_closed_form_example() {
    let a = 35f64.sqrt() / (115.0 * PI);
    let b = 10.0 / (23.0 * PI.powf(1.5));
    let want = 2.0 * 35f64.sqrt() / (345.0 * PI) * ((35.0 * PI).sqrt() / 50.0 * 1000.0 + 1.0).ln();
    assert!((log_term(a, b, 100.0, LogPower::ThreeHalves) - want).abs() < 1e-14);
}

#[test]
fn log_term_matches_quadrature_of_its_integral() {
    for power in [LogPower::ThreeHalves, LogPower::Half] {
        let q = log_integral_by_quadrature(0.1, 0.2, 50.0, power);
        let c = log_term(0.1, 0.2, 50.0, power);
        assert!((q - c).abs() < 1e-10, "{power:?}: {q} vs {c}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn log_identity_holds(a in 0.01f64..2.0, b in 0.01f64..2.0, n in 1.0f64..1e4, half in any::<bool>()) {
        let power = if half { LogPower::Half } else { LogPower::ThreeHalves };
        let q = log_integral_by_quadrature(a, b, n, power);
        let c = log_term(a, b, n, power);
        prop_assert!((q - c).abs() < 1e-9 * c.abs().max(1.0), "{} vs {}", q, c);
    }
}

fn int(f: u8, s: Selector) -> f64 {
    h_integral(f, s).unwrap().value
}

#[test]
fn tail_family_assembly() {
    for (family, f) in [(Family::PosTail, 1u8), (Family::NegTail, 2)] {
        let c = coefficients(family).unwrap();
        let k = int(f, Selector::First) - int(f, Selector::FirstThird);
        let u = int(f, Selector::FirstSecond) - int(f, Selector::FirstThirdFourth);
        assert_eq!(c.integral_constant, k);
        assert_eq!(c.u_coefficient, u);
        assert_eq!(c.log_coefficient, 0.0);
        assert!((c.constant - k / (4.0 * PI)).abs() < 1e-18);
    }
    let e = theorem_expansion(Family::NegTail, 400, 2.0).unwrap();
    let c = e.coefficients;
    let want =
        c.integral_constant / (4.0 * PI) + c.u_coefficient * 2.0 / (2.0 * PI * (400.0 * PI).sqrt());
    assert!((e.assembled_value - want).abs() < 1e-15);
    assert_eq!(e.assembled_value, e.expansion_value);
}

#[test]
fn unit_family_log_coefficients() {
    let c = coefficients(Family::Unit).unwrap();
    assert!((c.log_coefficient - 2.0 * (35f64.sqrt() - 5.0) / (345.0 * PI)).abs() < 1e-15);
    let c = coefficients(Family::NegUnit).unwrap();
    assert!((c.log_coefficient - 2.0 * (3f64.sqrt() - 1.0) / (11.0 * PI)).abs() < 1e-15);
}

#[test]
fn neg_unit_constant_from_its_pieces() {
    let c = coefficients(Family::NegUnit).unwrap();
    let want = (int(4, Selector::First) - int(4, Selector::FirstThird)) / (4.0 * PI)
        + 2.0 * 3f64.sqrt() / (11.0 * PI) * ((3.0 * PI).sqrt() / 4.0).ln()
        + 2.0 / (11.0 * PI) * (12.0 / PI.sqrt()).ln();
    assert!((c.constant - want).abs() < 1e-14);
}

#[test]
fn exact_logs_approach_the_simplified_expansion() {
    for family in [Family::Unit, Family::NegUnit] {
        let gap = |n: usize| {
            let e = theorem_expansion(family, n, 1.0).unwrap();
            (e.assembled_value - e.expansion_value).abs()
        };
        let (a, b, c) = (gap(100), gap(10_000), gap(1_000_000));
        assert!(a > b && b > c && c < 0.05 * a, "{family}: {a} {b} {c}");
    }
}

#[test]
fn warns_outside_validity_scale() {
    let e = theorem_expansion(Family::NegTail, 10_000, 1.0).unwrap();
    assert!(e.warning.is_none());
    let e = theorem_expansion(Family::NegTail, 10_000, 50.0).unwrap();
    assert!(e.warning.is_some());
    assert!(e.assembled_value.is_finite());
    let e = theorem_expansion(Family::PosTail, 16, 33.0).unwrap();
    assert!(e.warning.is_some());
}
