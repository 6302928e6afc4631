//! b = 1 identities, the pairing derivation and the first special cases
//! of the general family.

use super::fns::*;
use super::{CatalogEntry, Family, Param, Params, Parts};
use crate::master::{Lhs, ResidueRoute};
use crate::Result;

const S31: &str = "3.1";
const S32: &str = "3.2";
const S331: &str = "3.3.1";

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("Intf1", S31, Family::B1Specific, intf1).expr("2γ"),
        CatalogEntry::new("Intf2", S31, Family::B1Specific, intf2).expr("2γ(1) + γ² − π²/6"),
        CatalogEntry::new("Intf3", S31, Family::B1Specific, intf3).expr("−4γ(1) + 2γ² + π²/3"),
        CatalogEntry::new("Thing1", S31, Family::B1Specific, thing1).expr("−2π"),
        CatalogEntry::new("IntG1", S31, Family::B1Specific, intg1).expr("−2γ(1)/π + 2π/3"),
        CatalogEntry::new("IntG2", S31, Family::B1Specific, intg2).expr("4γπ/3 − (4γγ(1) − 2γ(2))/π"),
        CatalogEntry::new("IntG3", S31, Family::B1Specific, intg3)
            .expr("−17π²/120 + γ²/2 + γ(1) + (γ(3)/3 + γγ(2) − γ(1)²)/π²"),
        CatalogEntry::new("IntG5", S32, Family::B1Specific, intg5).expr("γ"),
        CatalogEntry::new("IntG5b", S32, Family::B1Specific, intg5b)
            .expr("1")
            .notes("residue route: alternating sum of b=1 general-family sums at a = 3/2 + k, k < 40, plus the a → ∞ limit 1/2"),
        CatalogEntry::new("fromDet", S32, Family::B1Specific, from_det)
            .expr("γ − 1")
            .notes("pairing: half the Intf1 residue sum minus the IntG5b series"),
        CatalogEntry::new("YLR1", S331, Family::GeneralEx6, ylr1)
            .param(Param::open("b", 0.3, 0.0, 1.0))
            .expr("−b"),
        CatalogEntry::new("YLR2", S331, Family::GeneralEx6, ylr2).expr("1/2 − γ"),
        CatalogEntry::new("K1", S331, Family::GeneralEx6, k1).expr("1/2 − γ"),
        CatalogEntry::new("K1b", S331, Family::GeneralEx6, k1b).expr("π^{1/4}(1/2 − γ)"),
        CatalogEntry::new("K1d", S331, Family::GeneralEx6, k1d)
            .expr("π^{1/4}(γ − 1/2)")
            .notes("labelled half-line form; the full-line restatement in the overview does not verify"),
    ]
}

fn cosh_pi(v: C64) -> C64 {
    (PI * v).cosh()
}

/// Master sum over the single merged pole −i/2 for a b = 1 kernel.
fn b1_route(k: &crate::master::Kernel) -> Result<ResidueRoute> {
    anti(k, 1.0, &[(ci(-0.5), 1), (ci(-1.5), 1), (ci(0.5), 1)])
}

fn b1(k: crate::master::Kernel, decay: f64, closed: f64) -> Result<Parts> {
    let route = b1_route(&k)?;
    parts(full_line(&k, decay), re(closed), route)
}

fn intf1(_: &Params) -> Result<Parts> {
    let k = kernel(|v| (zeta(1.5 - I * v) + zeta(0.5 + I * v)) / cosh_pi(v));
    b1(k, PI, 2.0 * g(0))
}

fn intf2(_: &Params) -> Result<Parts> {
    let k = kernel(|v| zeta(1.5 - I * v) * zeta(0.5 + I * v) / cosh_pi(v));
    b1(k, PI, 2.0 * g(1) + g(0) * g(0) - PI * PI / 6.0)
}

fn intf3(_: &Params) -> Result<Parts> {
    let k = kernel(|v| (zeta(1.5 - I * v).powi(2) + zeta(0.5 + I * v).powi(2)) / cosh_pi(v));
    b1(k, PI, -4.0 * g(1) + 2.0 * g(0) * g(0) + PI * PI / 3.0)
}

fn thing1(_: &Params) -> Result<Parts> {
    let k = kernel(|v| gamma(1.5 - I * v) * zeta(0.5 + I * v) - gamma(0.5 + I * v) * zeta(1.5 - I * v));
    b1(k, 0.5 * PI, -2.0 * PI)
}

fn intg1(_: &Params) -> Result<Parts> {
    let k = kernel(|v| (zeta(1.5 - I * v) - zeta(0.5 + I * v)) / cosh_pi(v).powi(2));
    b1(k, 2.0 * PI, -2.0 * g(1) / PI + 2.0 * PI / 3.0)
}

fn intg2(_: &Params) -> Result<Parts> {
    let k = kernel(|v| (zeta(1.5 - I * v).powi(2) - zeta(0.5 + I * v).powi(2)) / cosh_pi(v).powi(2));
    b1(k, 2.0 * PI, 4.0 * g(0) * PI / 3.0 - (4.0 * g(0) * g(1) - 2.0 * g(2)) / PI)
}

fn intg3(_: &Params) -> Result<Parts> {
    let k = kernel(|v| zeta(1.5 - I * v) * zeta(0.5 + I * v) / cosh_pi(v).powi(3));
    let (g0, g1, g2, g3) = (g(0), g(1), g(2), g(3));
    let closed = -17.0 * PI * PI / 120.0 + g0 * g0 / 2.0 + g1 + (g3 / 3.0 + g0 * g2 - g1 * g1) / (PI * PI);
    b1(k, 3.0 * PI, closed)
}

/// Half the Intf1 sum: ∫_0^∞ (ζ_R(1/2+iv) + ζ_R(3/2+iv)) sech(πv).
fn intg5_route() -> Result<ResidueRoute> {
    let k = kernel(|v| (zeta(1.5 - I * v) + zeta(0.5 + I * v)) / cosh_pi(v));
    Ok(b1_route(&k)?.scaled(0.5))
}

/// ∫_0^∞ ζ_R(a+iv) sech(πv) = I(a) with I(a) + I(a+1) = ½∫(ζ(a+iv)+ζ(a+1−iv))sech(πv),
/// unrolled 40 times from a = 3/2; I(41.5) − 1/2 is below 2e−13.
pub(super) fn intg5b_route() -> Result<ResidueRoute> {
    let mut terms = Vec::new();
    let kmax = 40;
    for k in 0..kmax {
        let a = 1.5 + k as f64;
        let ker = kernel(move |v| (zeta(a + I * v) + zeta(a + 1.0 - I * v)) / cosh_pi(v));
        let sign = if k % 2 == 0 { 0.5 } else { -0.5 };
        terms.push((sign, b1_route(&ker)?));
    }
    let a_end = 1.5 + kmax as f64;
    // I(σ) = 1/2 + Σ_{j≥2} j^{−σ}√j/(j+1)
    let tail: f64 = 0.5 + (2..6).map(|j: i32| (j as f64).powf(-a_end) * (j as f64).sqrt() / (j as f64 + 1.0)).sum::<f64>();
    Ok(lin(terms).shifted(re(tail)))
}

fn re_half(f: impl Fn(C64) -> C64 + Send + Sync + 'static, decay: f64) -> Lhs {
    half_line(line(move |v| f(re(v))), decay).real_part()
}

fn intg5(_: &Params) -> Result<Parts> {
    let lhs = re_half(|v| (zeta(0.5 + I * v) + zeta(1.5 + I * v)) / cosh_pi(v), PI);
    parts(lhs, re(g(0)), intg5_route()?)
}

fn intg5b(_: &Params) -> Result<Parts> {
    let lhs = re_half(|v| zeta(1.5 + I * v) / cosh_pi(v), PI);
    parts(lhs, re(1.0), intg5b_route()?)
}

pub(super) fn from_det_route() -> Result<ResidueRoute> {
    Ok(lin(vec![(1.0, intg5_route()?), (-1.0, intg5b_route()?)]))
}

fn from_det(_: &Params) -> Result<Parts> {
    let lhs = re_half(|v| zeta(0.5 + I * v) / cosh_pi(v), PI);
    parts(lhs, re(g(0) - 1.0), from_det_route()?)
}

/// (ζ(a+iv) + ζ(a+b−iv))/cosh(πv/b) with its general-family poles.
pub(super) fn ex6_route(a: f64, b: f64, n: i32) -> Result<(crate::master::Kernel, ResidueRoute)> {
    let k = kernel(move |v| (zeta(a + I * v).powi(n) + zeta(a + b - I * v).powi(n)) / (PI * v / b).cosh());
    let p = crate::residues::poles_ex6(a, b, n as u32)?;
    let r = master(&k, b, crate::master::CriterionKind::Antisymmetric, p)?;
    Ok((k, r))
}

fn ylr1(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let (_, r) = ex6_route(-b, 2.0 * b, 1)?;
    let lhs = re_half(move |v| (zeta(-b + I * v) + zeta(b - I * v)) / (PI * v / (2.0 * b)).cosh(), PI / (2.0 * b));
    parts(lhs, re(-b), r.scaled(0.5))
}

/// YLR1 at b = 1/2 minus fromDet.
fn ylr2_route() -> Result<ResidueRoute> {
    let (_, r) = ex6_route(-0.5, 1.0, 1)?;
    Ok(lin(vec![(0.5, r), (-1.0, from_det_route()?)]))
}

fn ylr2(_: &Params) -> Result<Parts> {
    let lhs = re_half(|v| zeta(-0.5 + I * v) / cosh_pi(v), PI);
    parts(lhs, re(0.5 - g(0)), ylr2_route()?)
}

fn k1(_: &Params) -> Result<Parts> {
    let lhs = re_half(
        |v| {
            // π^{iv−1}Γ(3/4−iv/2)ζ(3/2−iv)/(cosh(πv)Γ(−1/4+iv/2)), ratio via lnΓ
            let lg = ln_gamma(0.75 - I * v / 2.0) - ln_gamma(-0.25 + I * v / 2.0);
            ((I * v - 1.0) * PI.ln() + lg).exp() * zeta(1.5 - I * v) / cosh_pi(v)
        },
        PI,
    );
    parts(lhs, re(0.5 - g(0)), ylr2_route()?)
}

fn k1b(_: &Params) -> Result<Parts> {
    let lhs = re_half(
        |v| (I * v / 2.0 * PI.ln() - ln_gamma(-0.25 + I * v / 2.0)).exp() * upsilon(1.5 - I * v) / cosh_pi(v),
        PI,
    );
    let q = PI.powf(0.25);
    parts(lhs, re(q * (0.5 - g(0))), ylr2_route()?.scaled(q))
}

fn k1d(_: &Params) -> Result<Parts> {
    let lhs = re_half(
        |v| {
            let s = 1.5 - I * v;
            (I * v / 2.0 * PI.ln() - ln_gamma(0.75 + I * v / 2.0)).exp() * xi(s) / (s * cosh_pi(v))
        },
        PI,
    );
    let q = PI.powf(0.25);
    parts(lhs, re(q * (g(0) - 0.5)), ylr2_route()?.scaled(-q))
}

use crate::C64;
