//! The general family (ζ(a+iv)ⁿ + ζ(a+b−iv)ⁿ)/cosh(πv/b) and its
//! relatives with other symmetric combinations of the two ζ factors.

use super::fns::*;
use super::s3_specific::ex6_route;
use super::{CatalogEntry, Family, Param, Params, Parts};
use crate::master::{CriterionKind, Kernel, Lhs, ResidueRoute};
use crate::residues::{appendix_a_residue, indicator_h, poles_ex6};
use crate::{Result, C64};

const S33: &str = "3.3";
const S332: &str = "3.3.2";
const S333: &str = "3.3.3";
const S334: &str = "3.3.4";
const S335: &str = "3.3.5";
const S336: &str = "3.3.6";

pub fn entries() -> Vec<CatalogEntry> {
    let b_small = || Param::open("b", 1.0, -2.0, 2.0);
    vec![
        CatalogEntry::new("Ex6", S33, Family::GeneralEx6, ex6)
            .param(Param::open("a", 0.3, -3.0, 3.0))
            .param(Param::open("b", 0.9, -4.0, 4.0))
            .param(Param::closed("n", 2.0, 1.0, 4.0))
            .expr("−iπ sgn(b)(R_{n,1} + (R_{n,2} + R_{n,3}) H(a,b))")
            .notes("H(a,b) from pole membership: 1 if 1−b<a<1 (reversed for b<0), 1/2 on equality"),
        CatalogEntry::new("Ex6n", S332, Family::GeneralEx6, ex6n)
            .param(Param::open("a", 1.5, -3.0, 4.0))
            .param(Param::open("b", 1.0, -4.0, 4.0))
            .param(Param::closed("n", 2.0, 1.0, 4.0))
            .expr("2|b| ζ(a+b/2)ⁿ")
            .notes("requires H(a,b) = 0"),
        CatalogEntry::new("Ex6b", S332, Family::GeneralEx6, ex6b)
            .param(b_small())
            .param(Param::closed("n", 3.0, 1.0, 4.0))
            .expr("2|b|(−1/2)ⁿ"),
        CatalogEntry::new("Ex6Exp", S332, Family::GeneralEx6, |p| ex6_fun(p, |z| z.exp(), |x| 2.0 * x.exp()))
            .param(b_small())
            .expr("2|b| e^{−1/2}"),
        CatalogEntry::new("Ex6cB", S332, Family::GeneralEx6, |p| ex6_fun(p, |z| (-z).exp(), |x| 2.0 * (-x).exp()))
            .param(b_small())
            .expr("2|b| e^{1/2}"),
        CatalogEntry::new("Ex6ApB", S332, Family::GeneralEx6, |p| ex6_fun(p, |z| z.cosh(), |x| 2.0 * x.cosh()))
            .param(b_small())
            .expr("2|b| cosh(1/2)"),
        CatalogEntry::new("Ex6AmB", S332, Family::GeneralEx6, |p| ex6_fun(p, |z| z.sinh(), |x| 2.0 * x.sinh()))
            .param(b_small())
            .expr("−2|b| sinh(1/2)"),
        CatalogEntry::new("Scn1", S332, Family::GeneralEx6, scn1).expr("0"),
        CatalogEntry::new("IFg1d", S333, Family::GeneralEx6, ifg1d)
            .param(Param::open("a", 0.4, 0.0, 1.0))
            .param(Param::open("b", 0.8, 0.0, 4.0))
            .expr("bζ(a+b/2)² − 2πζ(2a−1+b)/cos(π(a−1)/b)")
            .notes("requires a + b > 1"),
        CatalogEntry::new("IFg1e", S333, Family::GeneralEx6, ifg1e)
            .param(Param::open("a", 0.4, 0.0, 1.0))
            .param(Param::open("b", 0.8, 0.0, 4.0))
            .expr("2bζ(a+b/2)² − 4γπ/cos A + 2π² sin A/(b cos² A), A = π(a−1)/b")
            .notes("requires a + b > 1"),
        CatalogEntry::new("BothSq", S333, Family::GeneralEx6, both_sq)
            .param(Param::open("a", 0.4, 0.0, 1.0))
            .param(Param::open("b", 0.8, 0.0, 4.0))
            .expr("4bζ(a+b/2)² − 4γπ/cos A + 2π² sin A/(b cos² A) − 4πζ(2a−1+b)/cos A"),
        CatalogEntry::new("DiffSq", S333, Family::GeneralEx6, diff_sq)
            .param(Param::open("a", 0.4, 0.0, 1.0))
            .param(Param::open("b", 0.8, 0.0, 4.0))
            .expr("−4γπ/cos A + 2π² sin A/(b cos² A) + 4πζ(2a−1+b)/cos A"),
        CatalogEntry::new("YLR2x", S334, Family::GeneralEx6, ylr2x)
            .param(Param::open("b", 1.5, 2.0 / 3.0, 2.0))
            .expr("−Xπ/sin(π/b) + bζ(b), X = 1 for 2/3 < b < 2")
            .notes("b = 1 is a removable limit and is rejected"),
        CatalogEntry::new("YLR2b", S334, Family::GeneralEx6, ylr2b).expr("ζ(1/2)/2"),
        CatalogEntry::new("ScPlus", S335, Family::GeneralEx6, sc_plus)
            .param(Param::open("b", 0.8, 0.0, 2.0))
            .expr("4γ²b"),
        CatalogEntry::new("ScMin", S335, Family::GeneralEx6, sc_min)
            .param(Param::open("b", 0.8, 0.0, 2.0))
            .expr("−8bγ(1) + 2π²/(3b)"),
        CatalogEntry::new("J1", S336, Family::GeneralEx6, j1).expr("(ζ(3/4) + π)/2"),
        CatalogEntry::new("J1a", S336, Family::GeneralEx6, j1a).expr("ζ(1/4)/2"),
        CatalogEntry::new("J1ab", S336, Family::GeneralEx6, j1ab).expr("(ζ(3/4) − ζ(1/4) + π)/2"),
    ]
}

fn int_n(p: &Params) -> Result<i32> {
    let n = arg(p, "n");
    require(n.fract() == 0.0, "n must be an integer")?;
    Ok(n as i32)
}

fn nonzero_b(p: &Params) -> Result<f64> {
    let b = arg(p, "b");
    require(b != 0.0, "b must be nonzero")?;
    Ok(b)
}

fn ex6(p: &Params) -> Result<Parts> {
    let (a, b, n) = (arg(p, "a"), nonzero_b(p)?, int_n(p)?);
    let h = indicator_h(a, b)?;
    require((a - 1.0).abs() > 1e-9 && (a + b - 1.0).abs() > 1e-9 || h == 0.5, "a on a pole boundary")?;
    let c = ctx();
    let r1 = appendix_a_residue(n as u32, 1, a, b, c)?;
    let closed = if h > 0.0 {
        let r2 = appendix_a_residue(n as u32, 2, a, b, c)?;
        let r3 = appendix_a_residue(n as u32, 3, a, b, c)?;
        -I * PI * b.signum() * (r1 + (r2 + r3) * h)
    } else {
        -I * PI * b.signum() * r1
    };
    let (k, route) = ex6_route(a, b, n)?;
    parts(full_line(&k, PI / b.abs()), closed, route)
}

fn ex6n(p: &Params) -> Result<Parts> {
    let (a, b, n) = (arg(p, "a"), nonzero_b(p)?, int_n(p)?);
    require(indicator_h(a, b)? == 0.0, "Ex6n needs both ζ poles outside the strip")?;
    let (k, route) = ex6_route(a, b, n)?;
    parts(full_line(&k, PI / b.abs()), re(2.0 * b.abs() * zr(a + b / 2.0)?.powi(n)), route)
}

fn ex6b(p: &Params) -> Result<Parts> {
    let (b, n) = (nonzero_b(p)?, int_n(p)?);
    let (k, route) = ex6_route(-b / 2.0, b, n)?;
    parts(full_line(&k, PI / b.abs()), re(2.0 * b.abs() * (-0.5f64).powi(n)), route)
}

/// (φ(ζ(−b/2+iv)) + φ(ζ(b/2−iv)))/cosh(πv/b) = 2|b|φ(−1/2)-type identities.
fn ex6_fun(p: &Params, phi: fn(C64) -> C64, rhs: fn(f64) -> f64) -> Result<Parts> {
    let b = nonzero_b(p)?;
    let a = -b / 2.0;
    let k: Kernel = kernel(move |v| (phi(zeta(a + I * v)) + phi(zeta(a + b - I * v))) / (PI * v / b).cosh());
    let route = master(&k, b, CriterionKind::Antisymmetric, poles_ex6(a, b, 1)?)?;
    parts(full_line(&k, PI / b.abs()), re(b.abs() * rhs(-0.5)), route)
}

fn scn1(_: &Params) -> Result<Parts> {
    let (k, route) = ex6_route(-1.0, -2.0, 1)?;
    parts(full_line(&k, PI / 2.0), re(0.0), route)
}

fn in_strip(a: f64, b: f64) -> Result<()> {
    require(a + b > 1.0, "requires a + b > 1")?;
    require((PI * (a - 1.0) / b).cos().abs() > 1e-9, "cos(π(a−1)/b) vanishes")?;
    require((a - 1.0 + b / 2.0).abs() > 1e-9, "a = 1 − b/2 is the limit case (ScPlus/ScMin)")
}

fn pair_kernel(a: f64, b: f64, f: fn(C64, C64) -> C64, order: u32) -> Result<(Kernel, ResidueRoute)> {
    let k = kernel(move |v| f(zeta(a + I * v), zeta(a + b - I * v)) / (PI * v / b).cosh());
    let route = master(&k, b, CriterionKind::Antisymmetric, poles_ex6(a, b, order)?)?;
    Ok((k, route))
}

fn cos_a(a: f64, b: f64) -> (f64, f64) {
    let aa = PI * (a - 1.0) / b;
    (aa.sin(), aa.cos())
}

fn ifg1d(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    in_strip(a, b)?;
    let (_, c) = cos_a(a, b);
    let closed = b * zr(a + b / 2.0)?.powi(2) - 2.0 * PI * zr(2.0 * a - 1.0 + b)? / c;
    let (k, route) = pair_kernel(a, b, |x, y| x * y, 1)?;
    parts(full_line(&k, PI / b), re(closed), route)
}

fn sq_terms(a: f64, b: f64) -> Result<(f64, f64, f64)> {
    let (s, c) = cos_a(a, b);
    let z2 = zr(a + b / 2.0)?.powi(2);
    let common = -4.0 * g(0) * PI / c + 2.0 * PI * PI * s / (b * c * c);
    let cross = 4.0 * PI * zr(2.0 * a - 1.0 + b)? / c;
    Ok((z2, common, cross))
}

fn ifg1e(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    in_strip(a, b)?;
    let (z2, common, _) = sq_terms(a, b)?;
    let (k, route) = pair_kernel(a, b, |x, y| x * x + y * y, 2)?;
    parts(full_line(&k, PI / b), re(2.0 * b * z2 + common), route)
}

fn both_sq(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    in_strip(a, b)?;
    let (z2, common, cross) = sq_terms(a, b)?;
    let (k, route) = pair_kernel(a, b, |x, y| (x + y) * (x + y), 2)?;
    parts(full_line(&k, PI / b), re(4.0 * b * z2 + common - cross), route)
}

fn diff_sq(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    in_strip(a, b)?;
    let (_, common, cross) = sq_terms(a, b)?;
    let (k, route) = pair_kernel(a, b, |x, y| (x - y) * (x - y), 2)?;
    parts(full_line(&k, PI / b), re(common + cross), route)
}

fn re_half(f: impl Fn(C64) -> C64 + Send + Sync + 'static, decay: f64) -> Lhs {
    half_line(line(move |v| f(re(v))), decay).real_part()
}

fn ylr2x(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    require((b - 1.0).abs() > 1e-6, "b = 1 is a removable limit")?;
    let x = crate::residues::StripSpec::new(b)?.weight(ci(b / 2.0 - 1.0));
    let closed = -x * PI / (PI / b).sin() + b * zr(b)?;
    let (_, route) = ex6_route(b / 2.0, b, 1)?;
    let lhs = re_half(move |v| (zeta(b / 2.0 + I * v) + zeta(1.5 * b - I * v)) / (PI * v / b).cosh(), PI / b);
    parts(lhs, re(closed), route.scaled(0.5))
}

fn ylr2b(_: &Params) -> Result<Parts> {
    let (_, route) = ex6_route(0.25, 0.5, 1)?;
    let lhs = re_half(|v| (zeta(0.25 + I * v) + zeta(0.75 - I * v)) / (2.0 * PI * v).cosh(), 2.0 * PI);
    parts(lhs, re(zr(0.5)? / 2.0), route.scaled(0.5))
}

fn sc_plus(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let (k, route) = pair_kernel(1.0 - b / 2.0, b, |x, y| (x + y) * (x + y), 2)?;
    parts(full_line(&k, PI / b), re(4.0 * g(0) * g(0) * b), route)
}

fn sc_min(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let (k, route) = pair_kernel(1.0 - b / 2.0, b, |x, y| (x - y) * (x - y), 2)?;
    parts(full_line(&k, PI / b), re(-8.0 * b * g(1) + 2.0 * PI * PI / (3.0 * b)), route)
}

fn j1_route() -> Result<ResidueRoute> {
    Ok(ex6_route(0.5, 0.5, 1)?.1.scaled(0.5))
}

fn j1a_route() -> Result<ResidueRoute> {
    Ok(ex6_route(0.0, 0.5, 1)?.1.scaled(0.5))
}

fn j1(_: &Params) -> Result<Parts> {
    let lhs = re_half(|v| (zeta(0.5 + I * v) + zeta(1.0 - I * v)) / (2.0 * PI * v).cosh(), 2.0 * PI);
    parts(lhs, re((zr(0.75)? + PI) / 2.0), j1_route()?)
}

fn j1a(_: &Params) -> Result<Parts> {
    let lhs = re_half(|v| (zeta(I * v) + zeta(0.5 - I * v)) / (2.0 * PI * v).cosh(), 2.0 * PI);
    parts(lhs, re(zr(0.25)? / 2.0), j1a_route()?)
}

fn j1ab(_: &Params) -> Result<Parts> {
    let lhs = re_half(|v| (zeta(1.0 + I * v) - zeta(I * v)) / (2.0 * PI * v).cosh(), 2.0 * PI);
    let route = lin(vec![(1.0, j1_route()?), (-1.0, j1a_route()?)]);
    parts(lhs, re((zr(0.75)? - zr(0.25)? + PI) / 2.0), route)
}
