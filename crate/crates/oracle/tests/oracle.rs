use rice_oracle::{adaptive_gl, density_oracle, exact_moments, QuadForm};

#[test]
fn cubic_at_one_is_exact() {
    let e = exact_moments(0.0, &[1.0; 3], 1.0);
    let want = [
        [14.0, 31.0, 46.0],
        [31.0, 70.0, 106.0],
        [46.0, 106.0, 164.0],
    ];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(e.get(i, j), want[i][j]);
        }
    }
    let f = e.quadratic_form();
    // LK - M^2 = det(C) c_11 / (2 det C)^2 by the adjugate minor identity.
    assert_eq!(
        (f.k, f.l, f.m, f.det, f.gap),
        (19.0 / 8.0, 30.5, 8.25, 4.0, 35.0 / 8.0)
    );
}

#[test]
fn gauss_legendre_recursion() {
    let v = adaptive_gl(|x| (-x * x).exp(), -10.0, 10.0, 1e-15);
    assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-14);
}

#[test]
fn independent_form_factorises() {
    // M = 0: the double integral is sqrt(pi/L)(1 + erf(u sqrt L))/2 * 1/(2K).
    let form = QuadForm::new(1.3, 0.7, 0.0, 2.0);
    let norm = (2.0 * std::f64::consts::PI).powf(1.5) * 2f64.sqrt();
    let erf_half = 0.5 * (1.0 + 0.677_801_193_837_418_5);
    let want = (std::f64::consts::PI / 0.7).sqrt() * erf_half / 2.6 / norm;
    let got = density_oracle(&form, 0.7 / 0.7f64.sqrt());
    assert!(((got - want) / want).abs() < 1e-12, "{got} vs {want}");
}
