use std::collections::BTreeSet;
use std::f64::consts::PI;

use glasser::catalog::{self, Family, Params};
use glasser::master::VerificationSettings;
use glasser::specfun::{riemann_zeta, stieltjes_constant};
use glasser::{Context, C64};

/// Every equation label in the ranges the catalog is meant to cover.
const IN_SCOPE: [&str; 110] = [
    "Intf1", "Intf2", "Intf3", "Thing1", "IntG1", "IntG2", "IntG3", "fromDet", "IntG5", "IntG5b", "YLR1", "YLR2",
    "K2a", "K1", "Ups", "Xi", "K1b", "K1d", "Ex6n", "Ex6b", "Ex6Exp", "Ex6cB", "Ex6d", "Ex6e", "Ex6ApB", "Ex6AmB",
    "Scn1", "IFg1d", "IFg1e", "BothSq", "DiffSq", "YLR2x", "YLR2b", "ScPlus", "ScMin", "J1", "J1a", "J1ab", "K4x",
    "Klim4", "K4xR1", "Ex7ab", "ZhId", "ZhId0", "K4xRd", "Ex7ab0", "Ex7B", "Ctx2m", "Ctx3", "CoshLim", "Ctx4",
    "CTy1a", "Ct4b1", "Ct4bm1", "C4f", "Crit4bB", "Crit4bA", "Crit4bC", "Kernel", "Crit4d", "Crit4ELb", "Crit4EUb",
    "Ded1", "CritLim", "Crit4bnS", "Ct2", "Ct2d", "Ct2e", "T1", "IntF6", "JaJbx", "JA1", "Jh", "Jh1", "AA", "AAE1",
    "J5e6", "J8b", "FintB1", "Fint1B", "Fint1C", "Fint1", "FintBx", "FintBx2", "FintG1", "FintG1a", "FintG1b",
    "FintG2", "FintG3", "FintAb", "CR1", "Cr2a", "Bdef", "Cg", "B4a", "C4s", "CR2b", "Cr2bd", "Q1", "Q2", "Q1mQ2",
    "Q1pQ2", "S(v)", "Sintm2", "P1", "P2", "Test2G", "Shalf7", "Sint4", "Zid",
];

/// Labels in those ranges that are not integral identities: definitions
/// (Ups, Xi, Kernel, Bdef, S(v), P1, P2), limit statements (Klim4, CoshLim,
/// Crit4ELb, Crit4EUb, CritLim — the last represented by Ded1) and equations
/// that are commented out of the source (K2a, Ex6d, Ex6e, K4xRd).
const NOT_IDENTITIES: [&str; 16] = [
    "Ups", "Xi", "Kernel", "Bdef", "S(v)", "P1", "P2", "Klim4", "CoshLim", "Crit4ELb", "Crit4EUb", "CritLim", "K2a",
    "Ex6d", "Ex6e", "K4xRd",
];

/// Catalogued although outside the ranges: the general identity the
/// Ex6* specialisations come from.
const EXTRA: [&str; 1] = ["Ex6"];

fn params(kv: &[(&str, f64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn coverage_matches_the_in_scope_list() {
    let ids: BTreeSet<&str> = catalog::paper_equations().into_iter().collect();
    let expected: BTreeSet<&str> =
        IN_SCOPE.iter().copied().filter(|l| !NOT_IDENTITIES.contains(l)).chain(EXTRA).collect();
    let missing: Vec<_> = expected.difference(&ids).collect();
    let unexpected: Vec<_> = ids.difference(&expected).collect();
    assert!(missing.is_empty() && unexpected.is_empty(), "missing {missing:?}, unexpected {unexpected:?}");
    assert!(ids.len() >= 80);
}

#[test]
fn ids_unique_and_defaults_in_range() {
    let cat = catalog::load_catalog().unwrap();
    let ids: BTreeSet<&str> = cat.iter().map(|e| e.id).collect();
    assert_eq!(ids.len(), cat.len());
    for e in &cat {
        for p in &e.params {
            assert!(p.contains(p.default), "{}: default {} of {} outside range", e.id, p.default, p.name);
        }
        assert!(!e.closed_form_expr.is_empty(), "{} has no closed form text", e.id);
    }
}

#[test]
fn catalog_json_shape() {
    let v = catalog::catalog_json();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), catalog::catalog().len());
    for e in arr {
        for key in ["id", "section", "family", "params", "closed_form_expr", "notes"] {
            assert!(e.get(key).is_some(), "missing {key} in {e}");
        }
        assert!(Family::from_name(e["family"].as_str().unwrap()).is_some());
        for (_, p) in e["params"].as_object().unwrap() {
            for key in ["default", "min", "max", "open_min", "open_max"] {
                assert!(p.get(key).is_some());
            }
        }
    }
    let text = serde_json::to_string(&v).unwrap();
    let back: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back, v);
}

#[test]
fn headline_suite_members() {
    let h = catalog::headline_suite();
    assert_eq!(h.len(), 17);
    let ids: Vec<&str> = h.iter().map(|e| e.id).collect();
    for id in ["IntG5b", "Ct4bm1", "Jh", "Ct2d", "J8b", "Test2G"] {
        assert!(ids.contains(&id));
    }
}

#[test]
fn families_partition_the_catalog() {
    let total: usize = Family::ALL.iter().map(|&f| catalog::by_family(f).len()).sum();
    assert_eq!(total, catalog::catalog().len());
    for f in Family::ALL {
        assert_eq!(Family::from_name(f.name()), Some(f));
        assert!(!catalog::by_family(f).is_empty(), "{} is empty", f.name());
    }
    assert_eq!(Family::from_name("nope"), None);
}

#[test]
fn closed_form_examples() {
    let ctx = Context::default();
    let g: Vec<f64> = (0..4).map(|j| stieltjes_constant(j, &ctx).unwrap()).collect();
    let closed = |id: &str, p: Params| catalog::find(id).unwrap().bind(&p).unwrap().closed_form;

    let intg3 = -17.0 * PI * PI / 120.0
        + g[0] * g[0] / 2.0
        + g[1]
        + (g[3] / 3.0 + g[0] * g[2] - g[1] * g[1]) / (PI * PI);
    assert!((closed("IntG3", Params::new()).re - intg3).abs() < 1e-14);

    let b = 0.8;
    let scmin = -8.0 * b * g[1] + 2.0 * PI * PI / (3.0 * b);
    assert!((closed("ScMin", params(&[("b", b)])).re - scmin).abs() < 1e-13);

    assert_eq!(closed("FintBx2", Params::new()), C64::new(0.0, 0.0));
    assert!((closed("IntG5b", Params::new()).re - 1.0).abs() < 1e-15);
    assert!((closed("Ct2d", Params::new()).re - 0.25).abs() < 1e-15);
    assert!((closed("Jh", Params::new()).re + PI).abs() < 1e-15);
    assert!((closed("J8b", Params::new()).re + PI * 2f64.sqrt() / 2.0).abs() < 1e-15);
    let z = riemann_zeta(C64::new(0.5, 0.0), &ctx).unwrap().re;
    assert!((closed("Ct4bm1", Params::new()).re - (z * z / 2.0 - PI / 4.0)).abs() < 1e-14);
}

#[test]
fn integrand_examples() {
    let ctx = Context::default();
    let i = C64::new(0.0, 1.0);
    let f = catalog::find("Intf1").unwrap().build_integrand(&Params::new()).unwrap();
    for v in [-2.0, 0.3, 1.7] {
        let want = (riemann_zeta(C64::new(1.5, 0.0) - i * v, &ctx).unwrap()
            + riemann_zeta(C64::new(0.5, 0.0) + i * v, &ctx).unwrap())
            / (PI * v).cosh();
        assert!((f(v) - want).norm() < 1e-14);
    }
    let b = 1.0;
    let f = catalog::find("Ex6ApB").unwrap().build_integrand(&params(&[("b", b)])).unwrap();
    for v in [-0.8, 0.4] {
        let z1 = riemann_zeta(C64::new(-b / 2.0, v), &ctx).unwrap();
        let z2 = riemann_zeta(C64::new(b / 2.0, -v), &ctx).unwrap();
        let want = (z1.cosh() + z2.cosh()) / (PI * v / b).cosh();
        assert!((f(v) - want).norm() < 1e-13);
    }
}

#[test]
fn parameter_validation() {
    let e = catalog::find("ScMin").unwrap();
    assert!(e.resolve_params(&params(&[("b", 0.5)])).is_ok());
    assert!(e.resolve_params(&params(&[("b", 2.0)])).is_err());
    assert!(e.resolve_params(&params(&[("b", f64::NAN)])).is_err());
    assert!(e.resolve_params(&params(&[("q", 1.0)])).is_err());
    assert!(matches!(catalog::find("NoSuchEq"), Err(glasser::Error::UnknownEntry(_))));
}

#[test]
fn verify_examples() {
    let s = VerificationSettings::default();
    let ctx = Context::default();
    let r = catalog::verify_entry(catalog::find("Intf1").unwrap(), &Params::new(), &s);
    assert!(r.pass, "{r:?}");
    assert!((r.lhs.re - 2.0 * stieltjes_constant(0, &ctx).unwrap()).abs() < 1e-8);

    let r = catalog::verify_entry(catalog::find("Ct2d").unwrap(), &Params::new(), &s);
    assert!(r.pass && (r.lhs.re - 0.25).abs() < 1e-8);

    let r = catalog::verify_entry(catalog::find("FintBx").unwrap(), &params(&[("a", 2.0), ("b", 3.0)]), &s);
    assert!(r.pass, "{r:?}");
    assert!((r.lhs.re - PI).abs() < 1e-6);
}

#[test]
fn out_of_range_override_becomes_failed_report() {
    let s = VerificationSettings::default();
    let r = catalog::verify_entry(catalog::find("ScMin").unwrap(), &params(&[("b", 5.0)]), &s);
    assert!(!r.pass);
    assert!(r.error.is_some());
}

#[test]
fn sweep_keeps_value_order_and_is_thread_count_independent() {
    let s = VerificationSettings::default();
    let e = catalog::find("Ctx4").unwrap();
    let values = [1.5, 0.5, 1.0];
    let one = catalog::sweep(e, "b", &values, &Params::new(), &s, 1).unwrap();
    let three = catalog::sweep(e, "b", &values, &Params::new(), &s, 3).unwrap();
    let bs: Vec<f64> = one.iter().map(|r| r.params[0].1).collect();
    assert_eq!(bs, values);
    for (a, b) in one.iter().zip(&three) {
        assert_eq!(a.lhs, b.lhs);
        assert_eq!(a.rhs_residues, b.rhs_residues);
        assert!(a.pass);
    }
    assert!(catalog::sweep(e, "zz", &values, &Params::new(), &s, 1).is_err());
}

#[test]
fn batch_reports_are_sorted_by_id() {
    let s = VerificationSettings::default();
    let entries = catalog::by_family(Family::TrigDifferentiated);
    let rs = catalog::run_entries(&entries, &s, 2);
    let ids: Vec<&str> = rs.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(rs.len(), entries.len());
}
