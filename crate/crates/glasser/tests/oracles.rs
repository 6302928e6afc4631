use std::f64::consts::PI;

use glasser::catalog::{self, Params};
use glasser::master::VerificationSettings;
use glasser::oracles::*;
use glasser::quadrature::{integrate_real_line, IntegrationSettings};
use glasser::{Context, C64};

fn params(kv: &[(&str, f64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn lhs(id: &str, p: Params) -> f64 {
    let b = catalog::find(id).unwrap().bind(&p).unwrap();
    b.lhs.integrate(&IntegrationSettings::default()).unwrap().value.re
}

#[test]
fn binomial_sum_matches_quadrature() {
    let s = IntegrationSettings::default();
    for n in 1..=6u32 {
        let f = |v: f64| C64::new(1.0 / (PI * v / 2.0).cosh() / (PI * v).cosh().powi(n as i32), 0.0);
        let q = integrate_real_line(&f, PI / 2.0 + n as f64 * PI, &s).unwrap().value.re;
        let o = oeis_sum(n).unwrap();
        assert!((q - o).abs() <= 1e-8, "n={n}: {q} vs {o}");
        // the printed form agrees for odd n only
        let printed = oeis_sum_printed(n).unwrap();
        assert_eq!(printed == o, n % 2 == 1);
    }
    assert!(oeis_sum(0).is_err());
}

#[test]
fn test2g_rhs_matches_quadrature() {
    for b in [0.6, 1.0, 1.4, 2.6, 3.4, 4.6] {
        let q = lhs("Test2G", params(&[("b", b)]));
        let o = test2g_rhs(b).unwrap();
        assert!((q - o).abs() <= 1e-7, "b={b}: {q} vs {o}");
    }
}

#[test]
fn shalf7_is_minus_test2g_at_seven_halves() {
    let closed = catalog::find("Shalf7").unwrap().bind(&Params::new()).unwrap().closed_form.re;
    assert!((closed + test2g_rhs(3.5).unwrap()).abs() < 1e-14);
    assert!((lhs("Shalf7", Params::new()) - closed).abs() < 1e-7);
}

#[test]
fn dirichlet_series_matches_intg5b_quadrature() {
    let q = lhs("IntG5b", Params::new());
    assert!((q - dirichlet_intg5b()).abs() < 1e-7, "{q}");
    assert!((dirichlet_intg5b_partial(1_000_000) - dirichlet_intg5b()).abs() < 1.1e-6);
}

#[test]
fn termwise_cosine_sine_value_is_pi_throughout() {
    for (a, b) in [(0.5, 0.6), (1.0, 1.0), (-0.5, 2.0), (2.0, 3.0)] {
        assert!((appendix_b_value(a, b).unwrap() - PI).abs() < 1e-15);
    }
    assert!(appendix_b_value(0.0, 1.0).is_err());
}

#[test]
fn dirichlet_shift_integral_cases() {
    let c = 2.0;
    // no term has n < x below 1
    assert_eq!(dirichlet_shift_integral(c, 0.5).unwrap(), 0.0);
    // x = 1: only the boundary term, half of the residue
    assert!((dirichlet_shift_integral(c, 1.0).unwrap() - PI).abs() < 1e-15);
    // x in (1, 2): one pole term
    let x: f64 = 1.5;
    assert!((dirichlet_shift_integral(c, x).unwrap() - 2.0 * PI * x.powf(-c)).abs() < 1e-15);
    // x = 3: two interior terms and a half one
    let want = 2.0 * PI * 2.0 * 3f64.powf(-c) + PI * 3f64.powf(-c);
    assert!((dirichlet_shift_integral(c, 3.0).unwrap() - want).abs() < 1e-15);
    assert!(dirichlet_shift_integral(1.0, 2.0).is_err());
    assert!(dirichlet_shift_integral(2.0, -1.0).is_err());
}

#[test]
fn zid_error_decreases_with_n() {
    let ctx = Context::default();
    let errs: Vec<f64> = (0..=4).map(|n| zid_approximation(20.0, n, &ctx).unwrap().1).collect();
    for w in errs.windows(2) {
        assert!(w[1] <= w[0], "{errs:?}");
    }
    assert!(errs[4] <= 1e-3, "{errs:?}");
}

#[test]
fn ded1_stand_in_agrees() {
    let (q, c) = ded1_check(&VerificationSettings::default()).unwrap();
    assert!((q - c).abs() <= 1e-6 * (1.0 + c.abs()), "{q} vs {c}");
}
