//! Shorthands shared by the entry modules.

use std::sync::{Arc, OnceLock};

use num_complex::Complex;

use super::{Params, Parts};
use crate::master::{CriterionKind, Domain, Kernel, Lhs, LineFn, MasterSum, ResidueRoute};
use crate::residues::{classify, PoleSpec, StripSpec};
use crate::specfun::{self, SpecialFunctionContext};
use crate::{Error, Result, C64};

pub const I: C64 = Complex { re: 0.0, im: 1.0 };
pub use std::f64::consts::{PI, SQRT_2};

pub fn ctx() -> &'static SpecialFunctionContext {
    static CTX: OnceLock<SpecialFunctionContext> = OnceLock::new();
    CTX.get_or_init(SpecialFunctionContext::default)
}

fn nan() -> C64 {
    C64::new(f64::NAN, f64::NAN)
}

pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn ci(y: f64) -> C64 {
    C64::new(0.0, y)
}

/// ζ(s); NaN at the pole so that quadrature reports a singular sample.
pub fn zeta(s: C64) -> C64 {
    specfun::riemann_zeta(s, ctx()).unwrap_or_else(|_| nan())
}

pub fn zeta_d(s: C64, n: usize) -> C64 {
    specfun::zeta_derivative(s, n, ctx()).map(|(d, _)| d).unwrap_or_else(|_| nan())
}

pub fn gamma(s: C64) -> C64 {
    specfun::gamma(s).unwrap_or_else(|_| nan())
}

pub fn ln_gamma(s: C64) -> C64 {
    specfun::ln_gamma(s).unwrap_or_else(|_| nan())
}

pub fn xi(s: C64) -> C64 {
    specfun::xi(s, ctx()).unwrap_or_else(|_| nan())
}

pub fn upsilon(s: C64) -> C64 {
    specfun::upsilon(s, ctx()).unwrap_or_else(|_| nan())
}

/// Real ζ for closed forms (errors propagate).
pub fn zr(x: f64) -> Result<f64> {
    Ok(specfun::riemann_zeta(re(x), ctx())?.re)
}

/// Stieltjes constant γ_j (γ_0 = γ).
pub fn g(j: usize) -> f64 {
    specfun::stieltjes_constant(j, ctx()).expect("tabulated Stieltjes constant")
}

pub fn sech(x: C64) -> C64 {
    1.0 / x.cosh()
}

pub fn arg(p: &Params, name: &str) -> f64 {
    *p.get(name).unwrap_or_else(|| panic!("parameter {name} resolved by the entry"))
}

pub fn kernel(f: impl Fn(C64) -> C64 + Send + Sync + 'static) -> Kernel {
    Arc::new(f)
}

pub fn line(f: impl Fn(f64) -> C64 + Send + Sync + 'static) -> LineFn {
    Arc::new(f)
}

/// The kernel restricted to the real axis.
pub fn on_line(k: &Kernel) -> LineFn {
    let k = k.clone();
    Arc::new(move |v| k(re(v)))
}

pub fn full_line(k: &Kernel, decay: f64) -> Lhs {
    Lhs::new(on_line(k), Domain::Line { decay })
}

pub fn half_line(f: LineFn, decay: f64) -> Lhs {
    Lhs::new(f, Domain::HalfLine { decay })
}

pub fn strip(b: f64) -> Result<StripSpec> {
    StripSpec::new(b)
}

/// Candidate points (location, order) classified against the strip.
pub fn poles(b: f64, cands: &[(C64, u32)]) -> Result<Vec<PoleSpec>> {
    Ok(classify(&strip(b)?, cands))
}

pub fn master(k: &Kernel, b: f64, criterion: CriterionKind, poles: Vec<PoleSpec>) -> Result<ResidueRoute> {
    Ok(ResidueRoute::Master(MasterSum::new(k.clone(), b, criterion, poles)?))
}

pub fn anti(k: &Kernel, b: f64, cands: &[(C64, u32)]) -> Result<ResidueRoute> {
    master(k, b, CriterionKind::Antisymmetric, poles(b, cands)?)
}

pub fn lin(terms: Vec<(f64, ResidueRoute)>) -> ResidueRoute {
    ResidueRoute::Linear(terms.into_iter().map(|(c, r)| (re(c), r)).collect())
}

pub fn parts(lhs: Lhs, closed: C64, route: ResidueRoute) -> Result<Parts> {
    Ok(Parts { lhs, closed, route, tolerance: None })
}

pub fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.to_string()))
    }
}
