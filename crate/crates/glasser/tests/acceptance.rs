//! One line per acceptance criterion; exits non-zero if any is red.
//! Run with `cargo test -p glasser --test acceptance`.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use glasser::catalog::{self, Params};
use glasser::master::{VerificationReport, VerificationSettings};
use glasser::oracles::{appendix_b_value, dirichlet_intg5b, oeis_sum, test2g_rhs, zid_approximation};
use glasser::residues::{appendix_a_residue, contour_radius, numeric_residue};
use glasser::specfun::{gamma, riemann_zeta, zeta_laurent};
use glasser::{Context, C64};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn params(kv: &[(&str, f64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn verify(id: &str, p: Params) -> VerificationReport {
    catalog::verify_entry(catalog::find(id).unwrap(), &p, &VerificationSettings::default())
}

fn failures(rs: &[VerificationReport]) -> Vec<String> {
    rs.iter().filter(|r| !r.pass).map(|r| format!("{}{:?}", r.id, r.params)).collect()
}

fn headline() -> Outcome {
    let t = Instant::now();
    let mut entries = catalog::headline_suite();
    entries.push(catalog::find("Intf1").unwrap());
    let rs = catalog::run_entries(&entries, &VerificationSettings::default(), jobs());
    let gamma0 = glasser::specfun::stieltjes_constant(0, &Context::default()).unwrap();
    let intf1 = rs.iter().find(|r| r.id == "Intf1").unwrap();
    let elapsed = t.elapsed();
    let bad = failures(&rs);
    let ok = bad.is_empty() && (intf1.lhs.re - 2.0 * gamma0).abs() <= 1e-6 && elapsed <= Duration::from_secs(300);
    outcome(ok, format!("{}/{} pass in {:.1}s, failing {bad:?}", rs.len() - bad.len(), rs.len(), elapsed.as_secs_f64()))
}

fn full_catalog(rs: &[VerificationReport], elapsed: Duration) -> Outcome {
    let bad = failures(rs);
    let ok = rs.len() >= 80 && bad.is_empty() && elapsed <= Duration::from_secs(900);
    outcome(ok, format!("{}/{} pass in {:.1}s, failing {bad:?}", rs.len() - bad.len(), rs.len(), elapsed.as_secs_f64()))
}

fn closed_form_residue_grid() -> Outcome {
    let ctx = Context::default();
    let avals = [0.1, 0.3, 0.45, 0.6, 0.8];
    let bvals = [0.6, 0.85, 1.15, 1.4, 1.7];
    let (mut worst, mut checked, mut skipped) = (0.0f64, 0, 0);
    for n in 1..=4u32 {
        for &a in &avals {
            for &b in &bvals {
                let poles = [C64::new(0.0, -b / 2.0), C64::new(0.0, a - 1.0), C64::new(0.0, 1.0 - a - b)];
                let sech: Vec<C64> = (-3..3).map(|k| C64::new(0.0, -b * (k as f64 + 0.5))).collect();
                // validity: distinct singularities and a + b/2 away from the zeta pole
                let all: Vec<C64> = poles.iter().chain(&sech).copied().collect();
                let crowded = poles[1..].iter().any(|p| all.iter().any(|q| q != p && (q - p).norm() < 0.05));
                if crowded || (a + b / 2.0 - 1.0).abs() < 0.05 {
                    skipped += 1;
                    continue;
                }
                let f = |v: C64| {
                    let z1 = riemann_zeta(C64::new(a, 0.0) + C64::i() * v, &ctx).unwrap();
                    let z2 = riemann_zeta(C64::new(a + b, 0.0) - C64::i() * v, &ctx).unwrap();
                    (z1.powi(n as i32) + z2.powi(n as i32)) / (v * PI / b).cosh()
                };
                for (j, &p) in poles.iter().enumerate() {
                    let num = numeric_residue(&f, p, contour_radius(p, &all), 64).unwrap();
                    let ana = appendix_a_residue(n, j as u32 + 1, a, b, &ctx).unwrap();
                    worst = worst.max((num - ana).norm() / ana.norm().max(1.0));
                }
                checked += 1;
            }
        }
    }
    outcome(worst <= 1e-9, format!("max deviation {worst:.2e} over {checked} (n,a,b) points, {skipped} outside validity"))
}

fn criterion_gate(rs: &[VerificationReport]) -> Outcome {
    let s = VerificationSettings::default();
    let worst = rs.iter().map(|r| (r.criterion_dev, r.id.as_str())).fold((0.0, ""), |m, x| if x.0 > m.0 { x } else { m });
    let nonfinite: Vec<&str> = rs.iter().filter(|r| !r.criterion_dev.is_finite()).map(|r| r.id.as_str()).collect();
    let ok = s.criterion_samples == 64 && nonfinite.is_empty() && worst.0 <= 1e-10;
    outcome(ok, format!("max deviation {:.2e} ({}) over {} entries, {} samples each", worst.0, worst.1, rs.len(), s.criterion_samples))
}

fn intg5b_triple() -> Outcome {
    let r = verify("IntG5b", Params::new());
    let (q, o, s) = (r.lhs.re, dirichlet_intg5b(), r.rhs_residues.re);
    let spread = (q - o).abs().max((q - s).abs()).max((o - s).abs()).max(r.lhs.im.abs()).max(r.rhs_residues.im.abs());
    outcome(spread <= 1e-7, format!("quadrature {q:.12}, oracle {o}, residues {s:.12}, spread {spread:.2e}"))
}

fn pairing() -> Outcome {
    let d = verify("fromDet", Params::new()).lhs.re;
    let g = verify("IntG5", Params::new()).lhs.re;
    let dev = (d - (g - 1.0)).abs();
    outcome(dev <= 2e-7, format!("fromDet {d:.12}, IntG5 − 1 {:.12}, deviation {dev:.2e}", g - 1.0))
}

fn trig() -> Outcome {
    let mut worst = Vec::new();
    let cg = (1..=6)
        .map(|n| (verify("Cg", params(&[("n", n as f64)])).lhs.re - oeis_sum(n).unwrap()).abs())
        .fold(0.0, f64::max);
    worst.push(("Cg", cg, 1e-8));
    let t2 = [0.6, 1.0, 1.4, 2.6, 3.4, 4.6]
        .iter()
        .map(|&b| (verify("Test2G", params(&[("b", b)])).lhs.re - test2g_rhs(b).unwrap()).abs())
        .fold(0.0, f64::max);
    worst.push(("Test2G", t2, 1e-7));
    for (id, p) in [("B4a", Params::new()), ("C4s", Params::new()), ("Shalf7", Params::new()), ("Sint4", params(&[("b", 1.0)]))] {
        let r = verify(id, p);
        worst.push((id, (r.lhs - r.rhs_closed).norm(), 1e-7));
    }
    let ok = worst.iter().all(|&(_, d, tol)| d <= tol);
    let text: Vec<String> = worst.iter().map(|(id, d, _)| format!("{id} {d:.1e}")).collect();
    outcome(ok, text.join(", "))
}

fn regimes() -> Outcome {
    let s = VerificationSettings::default();
    let base = Params::new();
    let mut rs = Vec::new();
    rs.extend(catalog::sweep(catalog::find("Ctx4").unwrap(), "b", &[0.5, 1.0, 1.5], &base, &s, jobs()).unwrap());
    rs.extend(catalog::sweep(catalog::find("Ct2").unwrap(), "a", &[0.5, 1.0, 1.5], &base, &s, jobs()).unwrap());
    for (id, b) in [("Crit4bB", 0.5), ("Crit4bA", 0.9), ("Crit4bC", 1.1)] {
        rs.push(verify(id, params(&[("b", b)])));
    }
    let bad = failures(&rs);
    outcome(bad.is_empty(), format!("{}/{} pass, failing {bad:?}", rs.len() - bad.len(), rs.len()))
}

fn independence() -> Outcome {
    let fb: Vec<f64> = [0.5, 1.0, 2.0].iter().map(|&b| verify("FintBx", params(&[("a", 2.0), ("b", b)])).lhs.re).collect();
    let spread = fb.iter().fold(f64::MIN, |m, &x| m.max(x)) - fb.iter().fold(f64::MAX, |m, &x| m.min(x));
    let plus = verify("Ex7ab", params(&[("b", 1.5)]));
    let minus = verify("Ex7ab", params(&[("b", -1.5)]));
    let flip = (plus.lhs - minus.lhs).norm().max((plus.rhs_residues - minus.rhs_residues).norm());
    let ab = [(0.5, 0.6), (1.0, 1.0), (-0.5, 2.0), (2.0, 3.0)]
        .iter()
        .map(|&(a, b)| (appendix_b_value(a, b).unwrap() - PI).abs())
        .fold(0.0, f64::max);
    let ok = spread <= 1e-7 && flip <= 1e-8 && ab == 0.0;
    outcome(ok, format!("FintBx spread {spread:.1e}, Ex7ab b→−b {flip:.1e}, appendix_b − π {ab:.1e}"))
}

fn zid() -> Outcome {
    let ctx = Context::default();
    let errs: Vec<f64> = (0..=4).map(|n| zid_approximation(20.0, n, &ctx).unwrap().1).collect();
    let ok = errs.windows(2).all(|w| w[1] <= w[0]) && errs[4] <= 1e-3;
    let text: Vec<String> = errs.iter().map(|e| format!("{e:.2e}")).collect();
    outcome(ok, format!("errors N=0..4: {}", text.join(", ")))
}

fn specfun_kernel() -> Outcome {
    let t = Instant::now();
    let ctx = Context::default();
    let one = C64::new(1.0, 0.0);
    let mut fe = 0.0f64;
    for i in 0..10 {
        for j in 0..10 {
            let s = C64::new(-5.0 + 11.0 * i as f64 / 9.0 + 0.013, -30.0 + 60.0 * j as f64 / 9.0 + 0.007);
            let lhs = riemann_zeta(s, &ctx).unwrap();
            let rhs = C64::new(2.0, 0.0).powc(s)
                * C64::new(PI, 0.0).powc(s - one)
                * (s * PI / 2.0).sin()
                * gamma(one - s).unwrap()
                * riemann_zeta(one - s, &ctx).unwrap();
            fe = fe.max((lhs - rhs).norm() / lhs.norm().max(1.0));
        }
    }
    let mut laurent = 0.0f64;
    for d in [1e-2, 1e-3] {
        for dir in [C64::new(1.0, 0.0), C64::new(-1.0, 0.0), C64::new(0.0, 1.0), C64::new(0.6, -0.8)] {
            let s = one + dir * d;
            laurent = laurent.max((zeta_laurent(s, 6, &ctx) - riemann_zeta(s, &ctx).unwrap()).norm());
        }
    }
    let elapsed = t.elapsed();
    let ok = fe <= 1e-9 && laurent <= 1e-9 && elapsed <= Duration::from_secs(10);
    outcome(ok, format!("functional equation {fe:.1e}, Laurent {laurent:.1e}, {:.2}s", elapsed.as_secs_f64()))
}

fn main() {
    let t = Instant::now();
    let all: Vec<_> = catalog::catalog().iter().collect();
    let reports = catalog::run_entries(&all, &VerificationSettings::default(), jobs());
    let catalog_time = t.elapsed();

    let results = [
        ("headline suite", headline()),
        ("full catalog", full_catalog(&reports, catalog_time)),
        ("closed-form residues", closed_form_residue_grid()),
        ("criterion gate", criterion_gate(&reports)),
        ("IntG5b triple agreement", intg5b_triple()),
        ("pairing fromDet = IntG5 − 1", pairing()),
        ("trigonometric identities", trig()),
        ("regime boundaries", regimes()),
        ("parameter independence", independence()),
        ("Zid approximation", zid()),
        ("special-function kernel", specfun_kernel()),
    ];
    let mut failed = 0;
    for (k, (name, o)) in results.iter().enumerate() {
        println!("criterion {:>2} {} {name}: {}", k + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
