use std::f64::consts::PI;
use std::sync::Arc;

use glasser::master::*;
use glasser::quadrature::IntegrationSettings;
use glasser::residues::{PoleSpec, StripSpec};
use glasser::specfun::{riemann_zeta, stieltjes_constant};
use glasser::{Context, C64};

fn i(y: f64) -> C64 {
    C64::new(0.0, y)
}

fn f1v() -> Kernel {
    let ctx = Arc::new(Context::default());
    Arc::new(move |v: C64| {
        let z1 = riemann_zeta(C64::new(1.5, 0.0) - i(1.0) * v, &ctx).unwrap();
        let z2 = riemann_zeta(C64::new(0.5, 0.0) + i(1.0) * v, &ctx).unwrap();
        (z1 + z2) / (v * PI).cosh()
    })
}

#[test]
fn antisymmetric_kernel_passes_the_criterion() {
    let strip = StripSpec::new(1.0).unwrap();
    let f = f1v();
    let d = check_criterion(&*f, &strip, &CriterionKind::Antisymmetric, 64, 1, &[]).unwrap();
    assert!(d <= 1e-12, "{d:e}");
}

#[test]
fn mismatched_kernel_violates_the_criterion() {
    // sech(πv) would satisfy it at b = 1; the half-period kernel does not
    let strip = StripSpec::new(1.0).unwrap();
    let f = |v: C64| 1.0 / (v * PI / 2.0).cosh();
    let d = check_criterion(&f, &strip, &CriterionKind::Antisymmetric, 64, 1, &[]).unwrap();
    assert!(d > 0.1, "{d:e}");
}

#[test]
fn h_variant_criteria() {
    // F(v) = e^{v}: F(v) − F(−ib−v) = (1 − e^{−ib−2v})F(v)
    let b = 0.7;
    let strip = StripSpec::new(b).unwrap();
    let f = |v: C64| v.exp();
    let h: Kernel = Arc::new(move |v: C64| 1.0 - (-i(b) - 2.0 * v).exp());
    let d = check_criterion(&f, &strip, &CriterionKind::DifferenceH(h.clone()), 32, 3, &[]).unwrap();
    assert!(d < 1e-12);
    let d = check_criterion(&f, &strip, &CriterionKind::AdditiveH(h), 32, 3, &[]).unwrap();
    assert!(d > 1e-3);
}

#[test]
fn criterion_is_seeded() {
    let strip = StripSpec::new(1.0).unwrap();
    let f = |v: C64| C64::new(v.re.sin(), 0.0) / (v * PI).cosh();
    let a = check_criterion(&f, &strip, &CriterionKind::Antisymmetric, 16, 42, &[]).unwrap();
    let b = check_criterion(&f, &strip, &CriterionKind::Antisymmetric, 16, 42, &[]).unwrap();
    assert_eq!(a, b);
}

#[test]
fn criterion_samples_avoid_declared_points() {
    let strip = StripSpec::new(1.0).unwrap();
    let f = |v: C64| if v.re.abs() < 1e-3 { C64::new(f64::NAN, 0.0) } else { C64::new(0.0, 0.0) };
    // the whole sampling window forbidden: cannot place samples
    let everywhere: Vec<f64> = (-5000..=5000).map(|k| k as f64 * 0.002).collect();
    assert!(check_criterion(&f, &strip, &CriterionKind::Antisymmetric, 8, 0, &everywhere).is_err());
    assert!(check_criterion(&f, &strip, &CriterionKind::Antisymmetric, 64, 0, &[0.0]).is_ok());
}

#[test]
fn residue_sum_factors() {
    let ctx = Context::default();
    let g = stieltjes_constant(0, &ctx).unwrap();
    let strip = StripSpec::new(1.0).unwrap();
    let poles = [PoleSpec::new(i(-0.5), 1, &strip).with_residue(i(2.0 * g / PI))];
    let r = rhs_from_residues(&poles, &CriterionKind::Antisymmetric, 1.0).unwrap();
    assert!((r - C64::new(2.0 * g, 0.0)).norm() < 1e-15);
    assert_eq!(rhs_from_residues(&[], &CriterionKind::Antisymmetric, 1.0).unwrap(), C64::new(0.0, 0.0));
    let h: Kernel = Arc::new(|_| C64::new(1.0, 0.0));
    let r2 = rhs_from_residues(&poles, &CriterionKind::AdditiveH(h), -1.0).unwrap();
    assert!((r2 + 2.0 * r).norm() < 1e-15);
    let unresolved = [PoleSpec::new(i(-0.5), 1, &strip)];
    assert!(matches!(
        rhs_from_residues(&unresolved, &CriterionKind::Antisymmetric, 1.0),
        Err(glasser::Error::UnresolvedResidue(_))
    ));
}

#[test]
fn master_sum_with_numeric_residue() {
    let strip = StripSpec::new(1.0).unwrap();
    let poles = vec![PoleSpec::new(i(-0.5), 1, &strip)];
    let m = MasterSum::new(f1v(), 1.0, CriterionKind::Antisymmetric, poles).unwrap();
    let g = stieltjes_constant(0, &Context::default()).unwrap();
    assert!((m.evaluate().unwrap() - C64::new(2.0 * g, 0.0)).norm() < 1e-11);
    assert_eq!(m.residues().unwrap().len(), 1);
    assert!(MasterSum::new(f1v(), 0.0, CriterionKind::Antisymmetric, vec![]).is_err());
}

#[test]
fn route_combinators() {
    let c = |x: f64| ResidueRoute::Constant(C64::new(x, 0.0));
    let r = ResidueRoute::Linear(vec![(C64::new(2.0, 0.0), c(1.5)), (C64::new(-1.0, 0.0), c(0.5).scaled(4.0))]);
    assert_eq!(r.evaluate().unwrap(), C64::new(1.0, 0.0));
    assert_eq!(c(1.0).shifted(i(1.0)).evaluate().unwrap(), C64::new(1.0, 1.0));
    assert!(r.masters().is_empty());
}

#[test]
fn residual_definition() {
    assert_eq!(residual(C64::new(1.0, 0.0), C64::new(1.0, 0.0)), 0.0);
    assert!((residual(C64::new(3.0, 0.0), C64::new(1.0, 0.0)) - 1.0).abs() < 1e-15);
    assert!((residual(C64::new(1e-3, 0.0), C64::new(0.0, 0.0)) - 1e-3).abs() < 1e-18);
}

fn f1v_identity(closed: C64) -> BoundIdentity {
    let k = f1v();
    let line = k.clone();
    let strip = StripSpec::new(1.0).unwrap();
    let route = MasterSum::new(k, 1.0, CriterionKind::Antisymmetric, vec![PoleSpec::new(i(-0.5), 1, &strip)]).unwrap();
    BoundIdentity {
        id: "Intf1".into(),
        paper_eq: "Intf1".into(),
        params: vec![],
        lhs: Lhs::new(Arc::new(move |v| line(C64::new(v, 0.0))), Domain::Line { decay: PI }),
        closed_form: closed,
        route: ResidueRoute::Master(route),
        tolerance: None,
    }
}

#[test]
fn verify_three_ways() {
    let g = stieltjes_constant(0, &Context::default()).unwrap();
    let s = VerificationSettings::default();
    let r = verify(&f1v_identity(C64::new(2.0 * g, 0.0)), &s);
    assert!(r.pass, "{r:?}");
    assert!(r.residual_closed < 1e-9 && r.residual_residues < 1e-9 && r.criterion_dev < 1e-12);

    // a wrong closed form fails on that leg only
    let r = verify(&f1v_identity(C64::new(2.0 * g + 1e-3, 0.0)), &s);
    assert!(!r.pass);
    assert!(r.residual_closed > 1e-4 && r.residual_residues < 1e-9);
}

#[test]
fn quadrature_failure_becomes_a_failed_report() {
    let mut id = f1v_identity(C64::new(1.0, 0.0));
    id.lhs = Lhs::new(Arc::new(|_| C64::new(f64::NAN, 0.0)), Domain::Line { decay: PI });
    let r = verify(&id, &VerificationSettings::default());
    assert!(!r.pass);
    assert!(r.error.as_deref().unwrap().starts_with("quadrature"));
}

#[test]
fn lhs_modes_and_affine_adjustments() {
    let s = IntegrationSettings::default();
    let f: LineFn = Arc::new(|v| C64::new(1.0, 2.0) / (PI * v).cosh());
    let full = Lhs::new(f.clone(), Domain::Line { decay: PI }).integrate(&s).unwrap();
    assert!((full.value - C64::new(1.0, 2.0)).norm() < 1e-12);
    let re = Lhs::new(f.clone(), Domain::Line { decay: PI }).real_part().integrate(&s).unwrap();
    assert!((re.value - C64::new(1.0, 0.0)).norm() < 1e-12);
    let im = Lhs::new(f.clone(), Domain::HalfLine { decay: PI }).imag_part().integrate(&s).unwrap();
    assert!((im.value - i(1.0)).norm() < 1e-12);
    let adj = Lhs::new(f, Domain::Line { decay: PI }).real_part().scaled(3.0).shifted(C64::new(-3.0, 0.0));
    assert!(adj.integrate(&s).unwrap().value.norm() < 1e-11);
}

#[test]
fn tolerance_override_is_honoured() {
    let g = stieltjes_constant(0, &Context::default()).unwrap();
    let mut id = f1v_identity(C64::new(2.0 * g + 1e-3, 0.0));
    id.tolerance = Some(1e-2);
    let mut s = VerificationSettings::default();
    s.tolerance = 1e-12;
    assert!(verify(&id, &s).pass);
}
