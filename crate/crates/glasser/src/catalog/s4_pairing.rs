//! Integrands without exponential decay, whose convergence relies on
//! pairing ζ(a+iv)/(a+iv) with its reflection, and the Hurwitz (w = 0)
//! variants with powers of 2.
//!
//! The stated integrals are evaluated with Gaussian damping exp(−σ²v²) and
//! extrapolated to σ → 0. Along the line the damped integral equals a
//! contour integral that is analytic in σ up to terms of order
//! exp(−ln²(q)/(4σ²)), q the smallest Dirichlet frequency ratio > 1 (2 for
//! plain ζ, 3/2 once a factor 2^{±iv} is present), which fixes the σ grids.

use super::fns::*;
use super::{CatalogEntry, Family, Param, Params, Parts};
use crate::master::{Domain, Kernel, Lhs, ResidueRoute};
use crate::oracles::{appendix_b_value, dirichlet_shift_integral};
use crate::{Result, C64};

const S41: &str = "4.1";
const S42: &str = "4.2";

const SIGMAS_ZETA: [f64; 6] = [0.020, 0.025, 0.030, 0.035, 0.040, 0.045];
const SIGMAS_POW2: [f64; 6] = [0.020, 0.023, 0.026, 0.029, 0.032, 0.035];

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("T1", S41, Family::PairingConvergence, t1)
            .param(Param::open("a", 0.3, 0.0, 1.0))
            .param(Param::open("b", 0.9, 0.0, 2.0))
            .expr("−2π")
            .notes("requires 1 − b < a < 1; conditionally convergent, evaluated by damping"),
        CatalogEntry::new("IntF6", S41, Family::PairingConvergence, intf6).expr("−2π"),
        CatalogEntry::new("JaJbx", S41, Family::PairingConvergence, jajbx)
            .param(Param::open("a", 0.5, -2.0, 3.0))
            .param(Param::open("b", 1.0, -2.0, 3.0))
            .expr("π")
            .notes("requires a + b > 1; residue route replaced by the termwise Dirichlet evaluation"),
        CatalogEntry::new("JA1", S41, Family::PairingConvergence, ja1)
            .param(Param::open("a", 0.3, 0.0, 1.0))
            .expr("−π"),
        CatalogEntry::new("Jh", S41, Family::PairingConvergence, jh).expr("−π"),
        CatalogEntry::new("Jh1", S41, Family::PairingConvergence, jh1).expr("−π"),
        CatalogEntry::new("AA", S42, Family::Hurwitz, aa).expr("−2π"),
        CatalogEntry::new("AAE1", S42, Family::Hurwitz, aae1).expr("−2π√2"),
        CatalogEntry::new("J5e6", S42, Family::Hurwitz, j5e6)
            .expr("3π√2/4")
            .notes("residue route replaced by the termwise Dirichlet evaluation"),
        CatalogEntry::new("J8b", S42, Family::Hurwitz, j8b).expr("−π√2/2"),
    ]
}

fn damped(f: impl Fn(f64) -> C64 + Send + Sync + 'static, sigmas: &[f64]) -> Lhs {
    Lhs::new(line(f), Domain::Damped { sigmas: sigmas.to_vec(), half_line: false })
}

fn half_damped(f: impl Fn(f64) -> C64 + Send + Sync + 'static, sigmas: &[f64]) -> Lhs {
    Lhs::new(line(f), Domain::Damped { sigmas: sigmas.to_vec(), half_line: true })
}

/// ζ(a+iv)/(a+iv) − ζ(a+b−iv)/(a+b−iv)
fn t1_kernel(a: f64, b: f64) -> Kernel {
    kernel(move |v| {
        let (s, t) = (a + I * v, a + b - I * v);
        zeta(s) / s - zeta(t) / t
    })
}

fn t1_route(a: f64, b: f64) -> Result<ResidueRoute> {
    let k = t1_kernel(a, b);
    anti(&k, b, &[(ci(a - 1.0), 1), (ci(1.0 - a - b), 1), (ci(a), 1), (ci(-a - b), 1)])
}

fn t1(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    require(a > 1.0 - b, "requires 1 − b < a")?;
    let k = t1_kernel(a, b);
    parts(damped(move |v| k(re(v)), &SIGMAS_ZETA), re(-2.0 * PI), t1_route(a, b)?)
}

fn intf6(_: &Params) -> Result<Parts> {
    let k = t1_kernel(0.5, 1.0);
    parts(damped(move |v| k(re(v)), &SIGMAS_ZETA), re(-2.0 * PI), t1_route(0.5, 1.0)?)
}

fn jajbx(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    let c = a + b;
    require(c > 1.0, "requires a + b > 1")?;
    let lhs = damped(move |v| zeta(c - I * v) / (c - I * v), &SIGMAS_ZETA);
    parts(lhs, re(PI), ResidueRoute::Constant(re(appendix_b_value(a, b)?)))
}

/// T1 at b = 1 plus the Dirichlet value of the reflected half.
fn ja1_route(a: f64) -> Result<ResidueRoute> {
    Ok(lin(vec![(1.0, t1_route(a, 1.0)?), (1.0, ResidueRoute::Constant(re(appendix_b_value(a, 1.0)?)))]))
}

fn ja1(p: &Params) -> Result<Parts> {
    let a = arg(p, "a");
    let lhs = damped(move |v| zeta(a + I * v) / (a + I * v), &SIGMAS_ZETA);
    parts(lhs, re(-PI), ja1_route(a)?)
}

fn jh(_: &Params) -> Result<Parts> {
    let lhs = damped(|v| zeta(0.5 + I * v) / (0.5 + I * v), &SIGMAS_ZETA);
    parts(lhs, re(-PI), ja1_route(0.5)?)
}

fn jh1(_: &Params) -> Result<Parts> {
    let lhs = half_damped(
        |v| {
            let z = zeta(0.5 + I * v);
            re((2.0 * v * z.im + z.re) / (0.25 + v * v))
        },
        &SIGMAS_ZETA,
    );
    parts(lhs, re(-PI), ja1_route(0.5)?)
}

fn pow2(s: C64) -> C64 {
    (s * std::f64::consts::LN_2).exp()
}

/// (2^s − 1)ζ(s)/s − (2^t − 1)ζ(t)/t, s = 1/2+iv, t = 3/2−iv
fn aa_kernel() -> Kernel {
    kernel(|v| {
        let (s, t) = (0.5 + I * v, 1.5 - I * v);
        (pow2(s) - 1.0) * zeta(s) / s - (pow2(t) - 1.0) * zeta(t) / t
    })
}

fn aa_route() -> Result<ResidueRoute> {
    anti(&aa_kernel(), 1.0, &[(ci(-0.5), 1), (ci(0.5), 1), (ci(-1.5), 1)])
}

fn aa(_: &Params) -> Result<Parts> {
    let k = aa_kernel();
    parts(damped(move |v| k(re(v)), &SIGMAS_POW2), re(-2.0 * PI), aa_route()?)
}

/// (AA + IntF6)/√2
fn aae1_route() -> Result<ResidueRoute> {
    Ok(lin(vec![(1.0 / SQRT_2, aa_route()?), (1.0 / SQRT_2, t1_route(0.5, 1.0)?)]))
}

fn aae1(_: &Params) -> Result<Parts> {
    let lhs = damped(
        |v| {
            let (s, t) = (0.5 + I * v, 1.5 - I * v);
            zeta(s) * pow2(I * v) / s - zeta(t) * pow2(1.0 - I * v) / t
        },
        &SIGMAS_POW2,
    );
    parts(lhs, re(-2.0 * PI * SQRT_2), aae1_route()?)
}

fn j5e6_value() -> Result<ResidueRoute> {
    Ok(ResidueRoute::Constant(re(dirichlet_shift_integral(1.5, 2.0)?)))
}

fn j5e6(_: &Params) -> Result<Parts> {
    let lhs = damped(|v| zeta(1.5 - I * v) * pow2(-I * v) / (1.5 - I * v), &SIGMAS_POW2);
    parts(lhs, re(3.0 * PI * SQRT_2 / 4.0), j5e6_value()?)
}

fn j8b(_: &Params) -> Result<Parts> {
    let lhs = damped(|v| zeta(0.5 + I * v) * pow2(I * v) / (0.5 + I * v), &SIGMAS_POW2);
    let route = lin(vec![(1.0, aae1_route()?), (2.0, j5e6_value()?)]);
    parts(lhs, re(-PI * SQRT_2 / 2.0), route)
}
