//! Complex a: representations of ζ(1/2+it) and the critical-line
//! approximation built from them.

use super::fns::*;
use super::{CatalogEntry, Family, Param, Params, Parts};
use crate::master::{CriterionKind, Kernel, Lhs, ResidueRoute};
use crate::residues::classify;
use crate::{specfun, Result, C64};

const S337: &str = "3.3.7";

pub fn entries() -> Vec<CatalogEntry> {
    let t = || Param::closed("t", 0.7, 0.0, 40.0);
    vec![
        CatalogEntry::new("K4x", S337, Family::GeneralEx6, k4x)
            .param(t())
            .expr("ζ(1/2+it)")
            .notes("principal value at v = t; the pole −i−t sits on the strip boundary"),
        CatalogEntry::new("K4xR1", S337, Family::GeneralEx6, k4x_r1).expr("ζ(1/2) + π/2"),
        CatalogEntry::new("Ex7ab", S337, Family::GeneralEx6, ex7ab)
            .param(Param::open("b", 1.5, -4.0, 4.0))
            .param(t())
            .expr("ζ(1/2+it)")
            .notes("|b| ≠ 1; correction term evaluated at |b| so that the identity is even in b"),
        CatalogEntry::new("ZhId", S337, Family::GeneralEx6, zh_id).param(t()).expr("ζ(1/2+it)"),
        CatalogEntry::new("ZhId0", S337, Family::GeneralEx6, zh_id0).expr("2ζ(1/2) + π√2"),
        CatalogEntry::new("Ex7ab0", S337, Family::GeneralEx6, ex7ab0).expr("√2π(π − 4)/4"),
        CatalogEntry::new("Ex7B", S337, Family::GeneralEx6, ex7b)
            .expr("−√2(−√2ζ(1/2)(γ/2 + ln(8π)/2 + π/4) − π²/2)"),
        CatalogEntry::new("Zid", S337, Family::Approximation, zid)
            .param(Param::closed("t", 20.0, 10.0, 40.0))
            .param(Param::closed("N", 4.0, 0.0, 6.0))
            .expr("(1/2)Σ_{j≤N} E_{2j}(ζ^{(2j)}(it) + ζ^{(2j)}(1+it))/(2^{2j}(2j)!) − 2/(π cosh πt)")
            .notes("approximation: compared with the K4x integral at tolerance 1e−3; N ≤ t²/10"),
    ]
}

fn k4x_kernel(t: f64) -> Kernel {
    kernel(move |v| (zeta(I * (t + v)) + zeta(1.0 + I * (t - v))) / (PI * v).cosh())
}

/// PV ∫ over the full line of the K4x kernel, as (lhs, residue route).
fn k4x_parts(t: f64) -> Result<(Lhs, ResidueRoute)> {
    let k = k4x_kernel(t);
    // ζ(1 + i(t−v)) ~ i/(v − t)
    let lhs = full_line(&k, PI).with_pv(t, I / (PI * t).cosh());
    let cands = [(ci(-0.5), 1), (-t - I, 1), (re(t), 1), (ci(0.5), 1)];
    let ms = crate::master::MasterSum::new(k, 1.0, CriterionKind::Antisymmetric, poles(1.0, &cands)?)?.avoiding(&[t]);
    Ok((lhs, ResidueRoute::Master(ms)))
}

fn k4x(p: &Params) -> Result<Parts> {
    let t = arg(p, "t");
    let (lhs, route) = k4x_parts(t)?;
    let corr = re(-PI / (2.0 * (PI * t).cosh()));
    let closed = specfun::riemann_zeta(C64::new(0.5, t), ctx())?;
    parts(lhs.scaled(0.5).shifted(corr), closed, route.scaled(0.5).shifted(corr))
}

fn k4x_r1(_: &Params) -> Result<Parts> {
    let (_, route) = k4x_parts(0.0)?;
    let lhs = half_line(line(|v| (zeta(ci(v)) + zeta(1.0 - I * v)) / (PI * v).cosh()), PI).real_part();
    parts(lhs, re(zr(0.5)? + PI / 2.0), route.scaled(0.5))
}

fn ex7_kernel(b: f64, t: f64) -> Kernel {
    kernel(move |v| (zeta((1.0 - b) / 2.0 + I * (t + v)) + zeta((1.0 + b) / 2.0 + I * (t - v))) / (PI * v / b).cosh())
}

/// (1/(2|b|))∫ kernel, with its master route.
fn ex7_parts(b: f64, t: f64) -> Result<(Lhs, ResidueRoute)> {
    let k = ex7_kernel(b, t);
    let cands = [
        (-t - I * (1.0 + b) / 2.0, 1),
        (t + I * (1.0 - b) / 2.0, 1),
        (ci(-b / 2.0), 1),
        (ci(b / 2.0), 1),
        (ci(-1.5 * b), 1),
    ];
    let st = strip(b)?;
    let route = master(&k, b, CriterionKind::Antisymmetric, classify(&st, &cands))?;
    let s = 1.0 / (2.0 * b.abs());
    Ok((full_line(&k, PI / b.abs()).scaled(s), route.scaled(s)))
}

fn ex7ab(p: &Params) -> Result<Parts> {
    let (b, t) = (arg(p, "b"), arg(p, "t"));
    require(b != 0.0 && (b.abs() - 1.0).abs() > 1e-6, "|b| = 1 puts a ζ pole on the real line")?;
    let h = if b.abs() > 1.0 { 1.0 } else { 0.0 };
    let bb = b.abs();
    let den = (PI / (2.0 * bb)).cos() * (PI * t / bb).sinh() + I * (PI * t / bb).cosh() * (PI / (2.0 * bb)).sin();
    let corr = -I * PI * h / (den * bb);
    let (lhs, route) = ex7_parts(b, t)?;
    let closed = specfun::riemann_zeta(C64::new(0.5, t), ctx())?;
    parts(lhs.shifted(corr), closed, route.shifted(corr))
}

fn zh_id(p: &Params) -> Result<Parts> {
    let t = arg(p, "t");
    let (lhs, route) = ex7_parts(2.0, t)?;
    let corr = -PI * SQRT_2 * (I * (PI * t / 2.0).sinh() + (PI * t / 2.0).cosh()) / (2.0 * (PI * t).cosh());
    let closed = specfun::riemann_zeta(C64::new(0.5, t), ctx())?;
    parts(lhs.shifted(corr), closed, route.shifted(corr))
}

/// Kernels on b = 1 with ζ-type singularities at −i/4 and −3i/4.
fn quarter_route(k: &Kernel, order: u32) -> Result<ResidueRoute> {
    anti(k, 1.0, &[(ci(-0.5), 1), (ci(-0.25), order), (ci(-0.75), order), (ci(0.5), 1)])
}

fn zh_id0(_: &Params) -> Result<Parts> {
    let k = kernel(|v| (zeta(-0.5 + 2.0 * I * v) + zeta(1.5 - 2.0 * I * v)) / (PI * v).cosh());
    let route = quarter_route(&k, 1)?;
    parts(full_line(&k, PI), re(2.0 * zr(0.5)? + PI * SQRT_2), route)
}

fn ex7ab0(_: &Params) -> Result<Parts> {
    let k = kernel(|v| {
        (zeta_d(-0.5 + 2.0 * I * v, 1) * -1.0 + zeta_d(1.5 - 2.0 * I * v, 1)) * (1.0 - 2.0 * I * v) / (PI * v).cosh()
    });
    let route = quarter_route(&k, 2)?;
    parts(full_line(&k, PI), re(SQRT_2 * PI * (PI - 4.0) / 4.0), route)
}

fn ex7b(_: &Params) -> Result<Parts> {
    let k = kernel(|v| (zeta_d(-0.5 + 2.0 * I * v, 1) + zeta_d(1.5 - 2.0 * I * v, 1)) / (PI * v).cosh());
    let route = quarter_route(&k, 2)?;
    let closed =
        -SQRT_2 * (-zr(0.5)? * (g(0) / 2.0 + (8.0 * PI).ln() / 2.0 + PI / 4.0) * SQRT_2 - PI * PI / 2.0);
    parts(full_line(&k, PI), re(closed), route)
}

/// The K4x integral at large t against the truncated Euler-number expansion.
fn zid(p: &Params) -> Result<Parts> {
    let (t, n) = (arg(p, "t"), arg(p, "N"));
    require(n.fract() == 0.0, "N must be an integer")?;
    let (approx, _) = crate::oracles::zid_approximation(t, n as usize, ctx())?;
    let (lhs, route) = k4x_parts(t)?;
    let corr = re(-PI / (2.0 * (PI * t).cosh()));
    let mut out = parts(lhs.scaled(0.5).shifted(corr), approx, route.scaled(0.5).shifted(corr))?;
    out.tolerance = Some(1e-3);
    Ok(out)
}
