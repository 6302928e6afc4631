//! Variations on the product kernel: the diagonal case a = 1/2 − b/2,
//! the four-pole kernel sech(πbv) − sech(πb(v+ib)), and ζ(a−iv)ζ(a−1+iv).

use super::fns::*;
use super::{CatalogEntry, Family, Param, Params, Parts};
use crate::master::{CriterionKind, Kernel, Lhs, MasterSum, ResidueRoute};
use crate::residues::{poles_ex6, poles_fgen_kernel, StripSpec};
use crate::Result;

const S34: &str = "3.4";
const S35: &str = "3.5";
const S36: &str = "3.6";

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("Ctx2m", S34, Family::ProductKernel, ctx2m).expr("ζ(1/2)π + ζ(3/4)²/2"),
        CatalogEntry::new("Ctx3", S34, Family::ProductKernel, ctx3)
            .param(Param::open("b", 0.4, 0.0, 2.0))
            .expr("bζ(1/2 − b/2)²"),
        CatalogEntry::new("Ctx4", S34, Family::ProductKernel, ctx4)
            .param(Param::open("b", 1.5, -4.0, 4.0))
            .expr("|b|ζ(1/2)² + sgn(b)Xπ sec(π(−1/2−b/2)/b), X = 0 (|b|<1), 1/2 (|b|=1), 1")
            .notes("real part; both ± signs follow sgn(b)"),
        CatalogEntry::new("CTy1a", S34, Family::ProductKernel, cty1a)
            .param(Param::open("b", 0.5, -4.0, 4.0))
            .expr("((2π)^{1/2+b/2}/2)(|b|ζ(1/2)² + sgn(b)Xπ sec(π(−1−b)/(2b)))")
            .notes("b = −1 is Ct4bm1"),
        CatalogEntry::new("Ct4b1", S34, Family::ProductKernel, ct4b1).expr("π(π/2 − ζ(1/2)²)"),
        CatalogEntry::new("Ct4bm1", S34, Family::ProductKernel, ct4bm1).expr("ζ(1/2)²/2 − π/4"),
        CatalogEntry::new("C4f", S35, Family::FgenFourpole, c4f).expr("πζ(1/2)(√2 − 1)"),
        CatalogEntry::new("Crit4bB", S35, Family::FgenFourpole, crit4bb)
            .param(Param::open("b", 0.5, 0.0, std::f64::consts::FRAC_1_SQRT_2))
            .expr("0"),
        CatalogEntry::new("Crit4bA", S35, Family::FgenFourpole, crit4ba)
            .param(Param::open("b", 0.9, std::f64::consts::FRAC_1_SQRT_2, 1.0))
            .expr("(2/|b|)ζ((b²+b−1)/(2b))ζ((−b²+b+1)/(2b))"),
        CatalogEntry::new("Crit4bC", S35, Family::FgenFourpole, crit4bc)
            .param(Param::open("b", 1.1, 1.0, 1.224744871391589))
            .expr("(2/|b|)ζ((b²+b−1)/(2b))ζ((−b²+b+1)/(2b)) + 4π sin(πb²/2)sin(π|b|/2)/(cos πb + cos πb²)"),
        CatalogEntry::new("Crit4d", S35, Family::FgenFourpole, crit4d)
            .param(Param::open("b", 0.5, 0.0, std::f64::consts::FRAC_1_SQRT_2))
            .expr("0")
            .notes("all three integrals moved to one side"),
        CatalogEntry::new("Ded1", S35, Family::FgenFourpole, ded1)
            .expr("−√2ζ(1/2 − √2/4)ζ(1/2 + √2/4)")
            .notes("printed as −√2ζ((√2−1)√2/4)ζ((1+√2)/4); the second argument is (2+√2)/4 numerically. Stands in for the b → 1/√2 limit"),
        CatalogEntry::new("Crit4bnS", S35, Family::FgenFourpole, crit4bns)
            .param(Param::open("b", 0.5, 0.0, std::f64::consts::FRAC_1_SQRT_2))
            .param(Param::closed("n", 1.0, 1.0, 2.0))
            .param(Param::closed("s", 1.0, 0.5, 2.0))
            .expr("0")
            .notes("s ∈ {1/2, 1, 2}; second kernel sech(πb(v+ib))^s"),
        CatalogEntry::new("Ct2", S36, Family::Crit2Family, ct2)
            .param(Param::open("a", 1.25, 0.0, 3.0))
            .expr("ζ(a − 1/2)² − 2πXζ(2a−2)sec(πa), X = 1 on 1<a<2, 1/2 at a ∈ {1, 2}")
            .notes("a = 3/2 is a removable limit; the stored value there is the Intf2 closed form"),
        CatalogEntry::new("Ct2d", S36, Family::Crit2Family, ct2d).expr("1/4"),
        CatalogEntry::new("Ct2e", S36, Family::Crit2Family, ct2e).expr("ζ(1/2)² − π/2"),
    ]
}

fn fcrit1(a: f64, b: f64) -> Kernel {
    kernel(move |v| zeta(a + I * v) * zeta(a + b - I * v) / (PI * v / b).cosh())
}

/// Master route of ζ(a+iv)ζ(a+b−iv)/cosh(πv/b).
fn fcrit1_route(a: f64, b: f64) -> Result<ResidueRoute> {
    let k = fcrit1(a, b);
    let ms = MasterSum::new(k, b, CriterionKind::Antisymmetric, poles_ex6(a, b, 1)?)?.avoiding(&[0.0]);
    Ok(ResidueRoute::Master(ms))
}

fn re_line(k: &Kernel, decay: f64) -> Lhs {
    full_line(k, decay).real_part().with_breaks(&[0.0])
}

fn ctx2m(_: &Params) -> Result<Parts> {
    let k = fcrit1(1.0, -0.5);
    parts(re_line(&k, 2.0 * PI), re(zr(0.5)? * PI + zr(0.75)?.powi(2) / 2.0), fcrit1_route(1.0, -0.5)?)
}

fn ctx3(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let k = fcrit1(0.5 - b, b);
    parts(full_line(&k, PI / b), re(b * zr(0.5 - b / 2.0)?.powi(2)), fcrit1_route(0.5 - b, b)?)
}

fn ctx4_closed(b: f64) -> Result<f64> {
    let x = StripSpec::new(b)?.weight(ci(-0.5 - b / 2.0));
    let sec = if x > 0.0 { 1.0 / (PI * (-0.5 - b / 2.0) / b).cos() } else { 0.0 };
    Ok(b.abs() * zr(0.5)?.powi(2) + b.signum() * x * PI * sec)
}

fn ctx4(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    require(b != 0.0, "b must be nonzero")?;
    let a = 0.5 - b / 2.0;
    parts(re_line(&fcrit1(a, b), PI / b.abs()), re(ctx4_closed(b)?), fcrit1_route(a, b)?)
}

/// The functional-equation image of the Ctx4 integrand.
fn cty1a_lhs(b: f64) -> Lhs {
    let c = 0.5 + b / 2.0;
    let k = kernel(move |v| {
        let s = c - I * v;
        zeta(s).powi(2) * gamma(s) * (I * v * (2.0 * PI).ln()).exp() * (PI * (0.25 - b / 4.0 + I * v / 2.0)).sin()
            / (PI * v / b).cosh()
    });
    re_line(&k, PI / b.abs())
}

fn cty1a(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    require(b != 0.0 && (b + 1.0).abs() > 1e-9, "b ∉ {0, −1}")?;
    let f = (2.0 * PI).powf(0.5 + b / 2.0) / 2.0;
    parts(cty1a_lhs(b), re(f * ctx4_closed(b)?), fcrit1_route(0.5 - b / 2.0, b)?.scaled(f))
}

fn ct4b1(_: &Params) -> Result<Parts> {
    let lhs = half_line(
        line(|x| {
            let s = 1.0 - I * x;
            let w = (I * x * (2.0 * PI).ln()).exp() * zeta(s).powi(2) * gamma(s);
            re(2.0 * w.im * (PI * x / 2.0).sinh() / (PI * x).cosh())
        }),
        PI / 2.0,
    );
    let f = (2.0 * PI).sqrt() * (2.0 * PI).sqrt() / 2.0;
    parts(lhs, re(PI * (PI / 2.0 - zr(0.5)?.powi(2))), fcrit1_route(0.0, 1.0)?.scaled(-f))
}

fn ct4bm1(_: &Params) -> Result<Parts> {
    let lhs = re_line(
        &kernel(|v| {
            let s = -I * v;
            (I * v * (2.0 * PI).ln()).exp() * zeta(s).powi(2) * gamma(s) * (PI * v / 2.0).cosh() / (PI * v).cosh()
        }),
        PI / 2.0,
    );
    parts(lhs, re(zr(0.5)?.powi(2) / 2.0 - PI / 4.0), fcrit1_route(1.0, -1.0)?.scaled(0.5))
}

/// ζ(a+iv)ⁿζ(a+b−iv)ⁿ(sech(πbv)^s − sech(πb(v+ib))^s).
fn frit4(a: f64, b: f64, n: i32, s: f64) -> Kernel {
    kernel(move |v| {
        let z = (zeta(a + I * v) * zeta(a + b - I * v)).powi(n);
        let (k1, k2) = (sech(PI * b * v), sech(PI * b * (v + I * b)));
        if s == 1.0 {
            z * (k1 - k2)
        } else {
            z * (k1.powf(s) - k2.powf(s))
        }
    })
}

fn frit4_route(a: f64, b: f64, n: u32, s: f64) -> Result<ResidueRoute> {
    let mut poles = poles_fgen_kernel(a, b, n)?;
    let order = s.ceil() as u32;
    for p in &mut poles {
        if p.order == 1 && order > 1 {
            p.order = order;
        }
    }
    let ms = MasterSum::new(frit4(a, b, n as i32, s), b, CriterionKind::Antisymmetric, poles)?.avoiding(&[0.0]);
    Ok(ResidueRoute::Master(ms))
}

fn frit4_line(b: f64) -> Lhs {
    full_line(&frit4(0.5 - b / 2.0, b, 1, 1.0), PI * b.abs()).with_breaks(&[0.0])
}

fn c4f(_: &Params) -> Result<Parts> {
    let z = |v: f64| zeta(0.5 + I * v) * zeta(1.0 - I * v);
    let lhs = full_line(
        &kernel(move |v| {
            let x = v.re;
            let w = z(x);
            let c = (PI * x).cosh();
            re(SQRT_2 * w.im * (PI * x / 2.0).sinh() / c + SQRT_2 * w.re * (PI * x / 2.0).cosh() / c
                - w.re / (PI * x / 2.0).cosh())
        }),
        PI / 2.0,
    )
    .with_breaks(&[0.0]);
    parts(lhs, re(PI * zr(0.5)? * (SQRT_2 - 1.0)), frit4_route(0.5, 0.5, 1, 1.0)?.scaled(-1.0))
}

fn crit4bb(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    parts(frit4_line(b), re(0.0), frit4_route(0.5 - b / 2.0, b, 1, 1.0)?)
}

fn crit4_zz(b: f64) -> Result<f64> {
    Ok(2.0 / b.abs() * zr((b * b + b - 1.0) / (2.0 * b))? * zr((-b * b + b + 1.0) / (2.0 * b))?)
}

fn crit4ba(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    parts(frit4_line(b), re(crit4_zz(b)?), frit4_route(0.5 - b / 2.0, b, 1, 1.0)?)
}

fn crit4bc(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let extra = 4.0 * PI * (PI * b * b / 2.0).sin() * (PI * b.abs() / 2.0).sin() / ((PI * b).cos() + (PI * b * b).cos());
    parts(frit4_line(b), re(crit4_zz(b)? + extra), frit4_route(0.5 - b / 2.0, b, 1, 1.0)?)
}

fn crit4d(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let a = 0.5 - b / 2.0;
    let (sb, cb) = ((PI * b * b).sin(), (PI * b * b).cos());
    let lhs = full_line(
        &kernel(move |v| {
            let x = v.re;
            let z = zeta(a + I * x) * zeta(a + b - I * x);
            let (ch, sh) = ((PI * b * x).cosh(), (PI * b * x).sinh());
            let den = sb * sb - ch * ch;
            re(cb * z.re * ch / den + z.re / ch + sb * z.im * sh / den)
        }),
        PI * b,
    )
    .with_breaks(&[0.0]);
    parts(lhs, re(0.0), frit4_route(a, b, 1, 1.0)?)
}

fn ded1(_: &Params) -> Result<Parts> {
    let b = std::f64::consts::FRAC_1_SQRT_2;
    let a = 0.5 - b / 2.0;
    let lhs = full_line(
        &kernel(move |v| {
            let x = v.re;
            let z = zeta(a + I * x) * zeta(a + b - I * x);
            re(z.im / (PI * b * x).sinh() - z.re / (PI * b * x).cosh())
        }),
        PI * b,
    )
    .with_breaks(&[0.0]);
    let closed = -SQRT_2 * zr(0.5 - SQRT_2 / 4.0)? * zr(0.5 + SQRT_2 / 4.0)?;
    parts(lhs, re(closed), frit4_route(a, b, 1, 1.0)?.scaled(-1.0))
}

fn crit4bns(p: &Params) -> Result<Parts> {
    let (b, n, s) = (arg(p, "b"), arg(p, "n"), arg(p, "s"));
    require(n.fract() == 0.0, "n must be an integer")?;
    require([0.5, 1.0, 2.0].contains(&s), "s must be one of 1/2, 1, 2")?;
    let a = 0.5 - b / 2.0;
    let k = frit4(a, b, n as i32, s);
    parts(full_line(&k, PI * b * s), re(0.0), frit4_route(a, b, n as u32, s)?)
}

/// ζ(a−iv)ζ(a−1+iv)/cosh(πv) is the product kernel at (a−1, 1).
fn ct2_parts(a: f64) -> Result<(Lhs, ResidueRoute)> {
    Ok((re_line(&fcrit1(a - 1.0, 1.0), PI), fcrit1_route(a - 1.0, 1.0)?))
}

fn ct2(p: &Params) -> Result<Parts> {
    let a = arg(p, "a");
    let closed = if (a - 1.5).abs() < 1e-12 {
        2.0 * g(1) + g(0) * g(0) - PI * PI / 6.0
    } else {
        require((a - 1.5).abs() > 1e-6, "a too close to the removable point 3/2")?;
        let x = StripSpec::new(1.0)?.weight(ci(a - 2.0));
        let tail = if x > 0.0 { 2.0 * PI * x * zr(2.0 * a - 2.0)? / (PI * a).cos() } else { 0.0 };
        zr(a - 0.5)?.powi(2) - tail
    };
    let (lhs, route) = ct2_parts(a)?;
    parts(lhs, re(closed), route)
}

fn ct2d(_: &Params) -> Result<Parts> {
    let (lhs, route) = ct2_parts(0.5)?;
    parts(lhs, re(0.25), route)
}

fn ct2e(_: &Params) -> Result<Parts> {
    let (lhs, route) = ct2_parts(1.0)?;
    parts(lhs, re(zr(0.5)?.powi(2) - PI / 2.0), route)
}
