use std::f64::consts::{PI, SQRT_2};

use glasser::residues::*;
use glasser::specfun::{riemann_zeta, stieltjes_constant};
use glasser::{Context, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn i(y: f64) -> C64 {
    C64::new(0.0, y)
}

fn near(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

#[test]
fn simple_sech_pole() {
    let f = |v: C64| 1.0 / (v * PI).cosh();
    let r = numeric_residue(&f, i(-0.5), 0.25, 64).unwrap();
    assert!(near(r, i(1.0 / PI), 1e-13), "{r}");
}

#[test]
fn pure_double_pole_has_no_residue() {
    let f = |v: C64| 1.0 / (v * v);
    let r = numeric_residue(&f, C64::new(0.0, 0.0), 0.25, 64).unwrap();
    assert!(r.norm() < 1e-14);
}

#[test]
fn cancelling_zeta_poles_leave_euler_gamma() {
    let ctx = Context::default();
    let f = |v: C64| {
        let z1 = riemann_zeta(C64::new(1.5, 0.0) - i(1.0) * v, &ctx).unwrap();
        let z2 = riemann_zeta(C64::new(0.5, 0.0) + i(1.0) * v, &ctx).unwrap();
        (z1 + z2) / (v * PI).cosh()
    };
    let g = stieltjes_constant(0, &ctx).unwrap();
    let r = numeric_residue(&f, i(-0.5), 0.25, 64).unwrap();
    assert!(near(r, i(2.0 * g / PI), 1e-11), "{r}");
}

#[test]
fn contour_radius_rules() {
    assert_eq!(contour_radius(i(-0.5), &[]), 0.25);
    assert!((contour_radius(i(-0.5), &[i(-0.6), i(-0.5)]) - 0.05).abs() < 1e-15);
    assert!(numeric_residue(&|v: C64| v, C64::new(0.0, 0.0), 0.0, 64).is_err());
}

#[test]
fn strip_weights() {
    let s = StripSpec::new(1.0).unwrap();
    assert_eq!(s.weight(i(-0.5)), 1.0);
    assert_eq!(s.weight(i(0.0)), 0.5);
    assert_eq!(s.weight(i(-1.0)), 0.5);
    assert_eq!(s.weight(i(-1.2)), 0.0);
    assert_eq!(s.weight(i(0.1)), 0.0);
    assert_eq!(s.orientation(), 1.0);
    let n = StripSpec::new(-2.0).unwrap();
    assert_eq!(n.weight(i(1.0)), 1.0);
    assert_eq!(n.weight(i(2.0)), 0.5);
    assert_eq!(n.weight(i(-0.5)), 0.0);
    assert_eq!(n.orientation(), -1.0);
    assert!(StripSpec::new(0.0).is_err());
    assert!(StripSpec::new(f64::NAN).is_err());
}

#[test]
fn classify_merges_coincident_candidates() {
    let s = StripSpec::new(1.0).unwrap();
    let poles = classify(&s, &[(i(-0.5), 1), (i(-0.5), 2), (i(0.0), 1), (i(-3.0), 1)]);
    let inner = poles.iter().find(|p| near(p.location, i(-0.5), 1e-12)).unwrap();
    assert_eq!(inner.order, 3);
    assert_eq!(inner.boundary_weight, 1.0);
    assert_eq!(poles.iter().find(|p| p.location.im == 0.0).unwrap().boundary_weight, 0.5);
}

#[test]
fn indicator_examples_and_perturbation() {
    assert_eq!(indicator_h(0.5, 1.0).unwrap(), 1.0);
    assert_eq!(indicator_h(1.0, 1.0).unwrap(), 0.5);
    assert_eq!(indicator_h(-0.5, 1.0).unwrap(), 0.0);
    assert_eq!(indicator_h(1.0 - 1e-3, 1.0).unwrap(), 1.0);
    assert_eq!(indicator_h(1.0 + 1e-3, 1.0).unwrap(), 0.0);
    assert!(indicator_h(0.5, 0.0).is_err());
}

#[test]
fn closed_form_residue_examples() {
    let ctx = Context::default();
    let z32 = riemann_zeta(C64::new(1.5, 0.0), &ctx).unwrap();
    let r = appendix_a_residue(1, 1, 0.5, 2.0, &ctx).unwrap();
    assert!(near(r, i(4.0 / PI) * z32, 1e-14));
    let r = appendix_a_residue(1, 2, 0.25, 1.0, &ctx).unwrap();
    assert!(near(r, i(SQRT_2), 1e-14));
    assert!(appendix_a_residue(1, 2, 0.5, 1.0, &ctx).is_err());
    assert!(appendix_a_residue(5, 1, 0.5, 2.0, &ctx).is_err());
    assert!(appendix_a_residue(1, 4, 0.5, 2.0, &ctx).is_err());
}

fn ex6_kernel(n: u32, a: f64, b: f64, ctx: &Context) -> impl Fn(C64) -> C64 + '_ {
    move |v: C64| {
        let z1 = riemann_zeta(C64::new(a, 0.0) + i(1.0) * v, ctx).unwrap();
        let z2 = riemann_zeta(C64::new(a + b, 0.0) - i(1.0) * v, ctx).unwrap();
        (z1.powi(n as i32) + z2.powi(n as i32)) / (v * PI / b).cosh()
    }
}

#[test]
fn closed_form_residues_match_contour_residues() {
    let ctx = Context::default();
    for n in 1..=4 {
        for (a, b) in [(0.3, 1.0), (0.5, 1.3), (0.75, 0.8)] {
            let f = ex6_kernel(n, a, b, &ctx);
            let poles = [(1, i(-b / 2.0)), (2, i(a - 1.0)), (3, i(1.0 - a - b))];
            for (j, p) in poles {
                let others: Vec<C64> = poles.iter().map(|q| q.1).chain([i(-1.5 * b), i(0.5 * b)]).collect();
                let num = numeric_residue(&f, p, contour_radius(p, &others), 64).unwrap();
                let ana = appendix_a_residue(n, j, a, b, &ctx).unwrap();
                assert!(near(num, ana, 1e-9), "n={n} j={j} a={a} b={b}: {num} vs {ana}");
            }
        }
    }
}

#[test]
fn product_kernel_analytic_matches_numeric_on_random_grid() {
    let ctx = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..12 {
        let b: f64 = rng.gen_range(0.3..1.8);
        let a: f64 = rng.gen_range((1.0 - b + 0.05)..0.95);
        let f = |v: C64| {
            let z1 = riemann_zeta(C64::new(a, 0.0) + i(1.0) * v, &ctx).unwrap();
            let z2 = riemann_zeta(C64::new(a + b, 0.0) - i(1.0) * v, &ctx).unwrap();
            z1 * z2 / (v * PI / b).cosh()
        };
        let poles = match poles_product_kernel(a, b, &ctx) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let locs: Vec<C64> = poles.iter().map(|p| p.location).chain([i(-1.5 * b), i(0.5 * b)]).collect();
        for p in poles.iter().filter(|p| p.analytic_residue.is_some()) {
            if locs.iter().any(|q| (q - p.location).norm() > 0.0 && (q - p.location).norm() < 0.02) {
                continue;
            }
            let num = numeric_residue(&f, p.location, contour_radius(p.location, &locs), 64).unwrap();
            let ana = p.analytic_residue.unwrap();
            assert!(near(num, ana, 1e-9), "a={a} b={b} at {}: {num} vs {ana}", p.location);
        }
    }
}

#[test]
fn closed_form_n1_is_product_kernel_p3() {
    // (ζⁿ + ζⁿ)/cosh at n = 1 and the product kernel share the −ib/2 residue
    // shape: (2b/π)iζ(a+b/2) vs (b/π)iζ(a+b/2)².
    let ctx = Context::default();
    let (a, b) = (0.3, 1.2);
    let z = riemann_zeta(C64::new(a + b / 2.0, 0.0), &ctx).unwrap();
    let r1 = appendix_a_residue(1, 1, a, b, &ctx).unwrap();
    let p3 = poles_product_kernel(a, b, &ctx).unwrap()[0].analytic_residue.unwrap();
    assert!(near(r1 * z / 2.0, p3, 1e-14));
}

#[test]
fn product_kernel_membership() {
    let ctx = Context::default();
    let inside = poles_product_kernel(0.4, 1.0, &ctx).unwrap();
    assert!(inside.iter().all(|p| p.boundary_weight == 1.0));
    let half = poles_product_kernel(1.0, -0.5, &ctx).unwrap();
    let w: Vec<f64> = half.iter().map(|p| p.boundary_weight).collect();
    assert_eq!(w, vec![1.0, 0.5, 0.5]);
    let b = 0.4;
    let only_p3 = poles_product_kernel(0.5 - b, b, &ctx).unwrap();
    let w: Vec<f64> = only_p3.iter().map(|p| p.boundary_weight).collect();
    assert_eq!(w, vec![1.0, 0.0, 0.0]);
}

#[test]
fn fgen_range_logic() {
    let weighted = |b: f64| -> Vec<C64> {
        poles_fgen_kernel(0.5 - b / 2.0, b, 1)
            .unwrap()
            .into_iter()
            .filter(|p| p.boundary_weight > 0.0)
            .map(|p| p.location)
            .collect()
    };
    let p4 = |b: f64| i((1.0 - 2.0 * b * b) / (2.0 * b));
    assert!(!weighted(0.5).iter().any(|&z| near(z, p4(0.5), 1e-12)));
    assert!(weighted(0.9).iter().any(|&z| near(z, p4(0.9), 1e-12)));
    assert!(weighted(1.1).iter().any(|&z| near(z, p4(1.1), 1e-12)));
}

#[test]
fn multiplicative_boundary_poles_are_half_weight() {
    let poles = poles_multiplicative(0.25, 1.0, 1, 1, 1).unwrap();
    let w = |z: C64| poles.iter().find(|p| near(p.location, z, 1e-12)).map(|p| p.boundary_weight);
    assert_eq!(w(i(-1.0)), Some(0.5));
    assert_eq!(w(i(-0.75)), Some(1.0));
    assert_eq!(w(i(-1.25)), Some(0.0));
    // trivial zeros of the reciprocal zeta factors, a = −9/2, b = 4
    let poles = poles_multiplicative(-4.5, 4.0, 0, 1, -1).unwrap();
    let inside: Vec<f64> = poles.iter().filter(|p| p.boundary_weight == 1.0).map(|p| p.location.im).collect();
    for y in [-2.5, -0.5, -1.5, -3.5] {
        assert!(inside.iter().any(|&t| (t - y).abs() < 1e-12), "missing {y} in {inside:?}");
    }
}

#[test]
fn trig_poles() {
    let cr1 = poles_trig(0.5, 1.0, false).unwrap();
    let w: Vec<&PoleSpec> = cr1.iter().filter(|p| p.boundary_weight > 0.0).collect();
    assert_eq!(w.len(), 1);
    assert!(near(w[0].location, i(-0.25), 1e-14));
    let shalf = poles_trig(3.5, -2.0, true).unwrap();
    assert!(shalf.iter().any(|p| p.order == 2 && p.boundary_weight == 1.0));
}

#[test]
fn weighted_sum_uses_analytic_values() {
    let s = StripSpec::new(1.0).unwrap();
    let poles = [
        PoleSpec::new(i(-0.5), 1, &s).with_residue(C64::new(2.0, 0.0)),
        PoleSpec::new(i(0.0), 1, &s).with_residue(C64::new(4.0, 0.0)),
        PoleSpec::new(i(-2.0), 1, &s).with_residue(C64::new(100.0, 0.0)),
    ];
    let f = |_: C64| C64::new(f64::NAN, 0.0);
    let total = weighted_residue_sum(&f, &poles, &[]).unwrap();
    assert_eq!(total, C64::new(4.0, 0.0));
    assert_eq!(residue_table(&f, &poles, &[]).unwrap().len(), 2);
}
