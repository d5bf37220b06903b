use rice_asymptotics::integrals::integrand;
use rice_asymptotics::{h_integral, Selector};

// Independent values from 300-digit tanh-sinh quadrature of the same
// integrands, 11 or 12 significant digits.
const HIGH_PRECISION: [(u8, Selector, f64); 16] = [
    (1, Selector::First, 0.0278729677888),
    (1, Selector::FirstThird, 0.0266236210661),
    (1, Selector::FirstSecond, 0.332766509605),
    (1, Selector::FirstThirdFourth, 0.29768242821),
    (2, Selector::First, 0.958783895189 / 9.0),
    (2, Selector::FirstThird, 0.812470649749 / 9.0),
    (2, Selector::FirstSecond, 2.91663130499 / 9.0),
    (2, Selector::FirstThirdFourth, 2.01872227594 / 9.0),
    (3, Selector::First, -0.25463857348),
    (3, Selector::FirstThird, -0.208625255669),
    (3, Selector::FirstSecond, -4.80806147334),
    (3, Selector::FirstThirdFourth, -2.77468347396),
    (4, Selector::First, -0.114641416055),
    (4, Selector::FirstThird, -0.0801099545708),
    (4, Selector::FirstSecond, -0.776933227959),
    (4, Selector::FirstThirdFourth, -0.182010414657),
];

#[test]
fn integrals_match_high_precision_quadrature() {
    for (f, sel, want) in HIGH_PRECISION {
        let r = h_integral(f, sel).unwrap();
        assert!(
            r.abs_error < 1e-9,
            "family {f} {sel}: error estimate {}",
            r.abs_error
        );
        assert!(
            (r.value - want).abs() < 2e-11 * want.abs().max(1.0),
            "family {f} {sel}: {} vs {want}",
            r.value
        );
    }
}

#[test]
fn cached_results_are_identical() {
    let a = h_integral(2, Selector::FirstSecond).unwrap();
    let b = h_integral(2, Selector::FirstSecond).unwrap();
    assert_eq!(a, b);
    assert!(h_integral(5, Selector::First).is_err());
}

#[test]
fn subtraction_switches_on_at_one() {
    let below = integrand(3, Selector::First, 1.0 - 1e-12).unwrap();
    let above = integrand(3, Selector::First, 1.0).unwrap();
    let jump = 4.0 * 35f64.sqrt() / 115.0;
    assert!((below - above - jump).abs() < 1e-9);
    assert_eq!(
        integrand(1, Selector::First, 2.0).unwrap(),
        rice_asymptotics::h_kernel(rice_asymptotics::KernelId::new(1, 1).unwrap(), 2.0).unwrap()
    );
}

// With H11 as the first factor the "H11 H33" integral diverges like
// -(4/23) ln T; only H31 H33 gives a finite value near -0.2085374.
#[test]
fn mislabelled_family_three_product_is_h31_h33() {
    use rice_asymptotics::{h_kernel, KernelId};
    use rice_core::quadrature::{integrate, QuadOptions};
    let partial = |first: KernelId, top: f64| {
        let h33 = KernelId::new(3, 3).unwrap();
        let g = |t: f64| {
            let v = h_kernel(first, t).unwrap() * h_kernel(h33, t).unwrap();
            if t >= 1.0 {
                v - 4.0 / (23.0 * t)
            } else {
                v
            }
        };
        let opts = QuadOptions::new(1e-13, 1e-11, 4000);
        integrate(|s| g(s.exp()) * s.exp(), (1e-6f64).ln(), 0.0, opts).value
            + integrate(|s| g(s.exp()) * s.exp(), 0.0, top.ln(), opts).value
    };
    let h11 = KernelId::new(1, 1).unwrap();
    let h31 = KernelId::new(3, 1).unwrap();
    let growth = partial(h11, 1e4) - partial(h11, 1e2);
    assert!((growth + 4.0 / 23.0 * 100f64.ln()).abs() < 1e-3, "{growth}");
    let settled = partial(h31, 1e4) - partial(h31, 1e2);
    assert!(settled.abs() < 1e-12, "{settled}");
    assert!((h_integral(3, Selector::FirstThird).unwrap().value + 0.2085374).abs() < 1e-4);
}
