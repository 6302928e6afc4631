//! The multiplicative family F = ζ(a+iv)^r ζ(a+b−iv)^r /((b−iv)^p (a+b−iv)^q)
//! with F(v) + F(−ib−v) = h(v)F(v), h = 1 + (b−iv)^p(a+b−iv)^q/((iv)^p(a+iv)^q).
//!
//! The stated integrands are real or imaginary parts of F(v) − F(−ib−v),
//! which decay only algebraically; tails are taken with the log substitution
//! up to a finite reach. For a ≥ 1 and r = −1 the decay is an oscillating
//! 1/v, handled by Gaussian damping: 1/ζ(a+iv)ζ(a+b−iv) is a Dirichlet
//! series in (m/n)^{iv} whose near-diagonal pairs (n, n+1) carry weight
//! ~ n^{−2a−b} and leave an error ~ exp(−1/(4n²σ²)), so σ stays below 0.012.

use super::fns::*;
use super::{CatalogEntry, Family, Param, Params, Parts};
use crate::master::{CriterionKind, Domain, Kernel, Lhs, LineFn, MasterSum, ResidueRoute};
use crate::residues::poles_multiplicative;
use crate::{Result, C64};

const S43: &str = "4.3";

pub fn entries() -> Vec<CatalogEntry> {
    let b1 = || Param::open("b", 1.0, 0.0, 4.0);
    vec![
        CatalogEntry::new("FintB1", S43, Family::MultiplicativeH, fint_b1)
            .param(Param::open("a", 0.25, 0.0, 1.0))
            .param(b1())
            .expr("πζ(a+b)ζ(a)/(2(a+b)a) − πζ(2a−1+b)(2a+b−2)/((a+b−1)(2a−1+b)(a−1))")
            .notes("requires 1 − b < a < 1 and 2a + b ≠ 2"),
        CatalogEntry::new("Fint1B", S43, Family::MultiplicativeH, fint_1b)
            .param(Param::open("a", 1.5, 1.0, 5.0))
            .param(b1())
            .expr("πζ(a+b)ζ(a)/(2(a+b)a)")
            .notes("a > 1 only; the branch a < −b does not verify"),
        CatalogEntry::new("Fint1C", S43, Family::MultiplicativeH, fint_1c)
            .param(Param::open("a", -0.5, -0.6, 0.0))
            .param(b1())
            .expr("πζ(a+b)ζ(a)/(2(a+b)a) + πζ(2a+b)/(2(a+b)a)")
            .notes("requires −b < a < min(0, 1 − b) and 2a + b ≠ 1; catalogued where the integrand decays at least like v^{−1.6}"),
        CatalogEntry::new("Fint1", S43, Family::MultiplicativeH, fint1).expr("πζ(1/2)/3 − πζ(1/4)ζ(5/4)/10"),
        CatalogEntry::new("FintBx", S43, Family::MultiplicativeH, fint_bx)
            .param(Param::open("a", 2.0, 0.0, 10.0))
            .param(Param::open("b", 1.0, 0.0, 10.0))
            .expr("π√(a/2)")
            .notes("p = 1, q = −1/2, r = 0; tail decays like v^{−3/2}"),
        CatalogEntry::new("FintBx2", S43, Family::MultiplicativeH, fint_bx2)
            .expr("0")
            .notes("FintBx at a = 0, b = 1 up to sign; the residue sum π√(a/2) is taken in the limit a → 0"),
        CatalogEntry::new("FintG1", S43, Family::MultiplicativeH, fint_g1)
            .param(Param::open("a", 2.0, 1.0, 6.0))
            .param(Param::open("b", 1.0, 0.0, 6.0))
            .expr("π/(2ζ(a+b)ζ(a))")
            .notes("requires b < a"),
        CatalogEntry::new("FintG1a", S43, Family::MultiplicativeH, fint_g1a)
            .param(Param::open("b", 2.0, 1.0, 6.0))
            .expr("0"),
        CatalogEntry::new("FintG1b", S43, Family::MultiplicativeH, fint_g1b)
            .param(Param::open("b", 2.0, 1.0, 6.0))
            .expr("0")
            .notes("the two stated integrals are catalogued as their difference"),
        CatalogEntry::new("FintG2", S43, Family::MultiplicativeH, fint_g2)
            .param(Param::open("a", -2.6, -8.0, 0.5))
            .param(Param::open("b", 2.8, 0.0, 8.0))
            .expr("π/(2ζ(a+b)ζ(a)) − Σ_n T(n) − Σ_m T(m), T(k) = π(a+b/2+2k)/(ζ'(−2k)(a+b+2k)ζ(2a+2k+b)(a+2k))")
            .notes("requires a + b < 1/2; n and m both run over the k with −b < a + 2k < 0"),
        CatalogEntry::new("FintG3", S43, Family::MultiplicativeH, fint_g3)
            .expr("96π⁵/(7ζ(5)) − 64π³/ζ(3) − π/(4ζ(−1/2)ζ(−9/2))"),
        CatalogEntry::new("FintAb", S43, Family::MultiplicativeH, fint_ab)
            .expr("(32π/9)(−π⁴ζ(1/2)²/4 + (49/2 − 23γ/3)ζ(3/2)² + 23ζ(3/2)ζ'(3/2)/3)"),
    ]
}

/// Exponents of F; q may be fractional (principal branch).
#[derive(Clone, Copy)]
struct Shape {
    p: i32,
    q: f64,
    r: i32,
}

fn f_kernel(a: f64, b: f64, s: Shape) -> Kernel {
    kernel(move |v| {
        let (z1, z2) = (a + I * v, a + b - I * v);
        let zz = if s.r == 0 { re(1.0) } else { (zeta(z1) * zeta(z2)).powi(s.r) };
        zz / ((b - I * v).powi(s.p) * z2.powf(s.q))
    })
}

fn h_kernel(a: f64, b: f64, s: Shape) -> Kernel {
    kernel(move |v| {
        1.0 + (b - I * v).powi(s.p) * (a + b - I * v).powf(s.q) / ((I * v).powi(s.p) * (a + I * v).powf(s.q))
    })
}

/// −2πi Σ w Res F over the poles of F; equals ∫(F(v) − F(−ib−v)) dv.
fn mult_route(a: f64, b: f64, s: Shape) -> Result<ResidueRoute> {
    let q = if s.q > 0.0 { s.q.ceil() as i32 } else { 0 };
    let poles = poles_multiplicative(a, b, s.p, q, s.r)?;
    let crit = CriterionKind::AdditiveH(h_kernel(a, b, s));
    let ms = MasterSum::new(f_kernel(a, b, s), b, crit, poles)?.avoiding(&[0.0]);
    Ok(ResidueRoute::Master(ms))
}

/// Half-line integral with an algebraic tail.
fn tail(f: LineFn, power: f64, reach: f64) -> Lhs {
    Lhs::new(f, Domain::Algebraic { cut: 20.0, power, reach, half_line: true })
}

/// Convexity exponent μ(σ) with |ζ(σ+iv)| ≪ v^{μ(σ)}.
fn growth(sigma: f64) -> f64 {
    if sigma < 0.0 {
        0.5 - sigma
    } else {
        ((1.0 - sigma) / 2.0).max(0.0)
    }
}

const ZETA_REACH: f64 = 1500.0;

const SIGMAS_MU: [f64; 6] = [0.006, 0.007, 0.008, 0.009, 0.010, 0.011];

fn damped_half(f: LineFn) -> Lhs {
    Lhs::new(f, Domain::Damped { sigmas: SIGMAS_MU.to_vec(), half_line: true })
}

fn b1_shape() -> Shape {
    Shape { p: 1, q: 1.0, r: 1 }
}

/// ∫_0^∞ Re[ζ(a+b−iv)ζ(a+iv)(ib+2v)/((b−iv)(a+b−iv)(a+iv)v)] with its route.
fn b1_parts(a: f64, b: f64) -> Result<(Lhs, ResidueRoute)> {
    let f = line(move |v| {
        zeta(a + b - I * v) * zeta(a + I * v) * (I * b + 2.0 * v)
            / ((b - I * v) * (a + b - I * v) * (a + I * v) * v)
    });
    let power = 3.0 - growth(a) - growth(a + b);
    // below this the truncated tail is no longer controlled
    require(power >= 1.6, "integrand decays too slowly for the truncated tail")?;
    let route = mult_route(a, b, b1_shape())?.scaled(1.0 / (2.0 * (a + b)));
    Ok((tail(f, power, ZETA_REACH).real_part(), route))
}

fn b1_base(a: f64, b: f64) -> Result<f64> {
    Ok(PI * zr(a + b)? * zr(a)? / (2.0 * (a + b) * a))
}

fn fint_b1(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    require(a > 1.0 - b, "requires 1 − b < a")?;
    require((2.0 * a + b - 2.0).abs() > 1e-6, "2a + b = 2 puts ζ at its pole")?;
    let c = 2.0 * a - 1.0 + b;
    let closed = b1_base(a, b)? - PI * zr(c)? * (2.0 * a + b - 2.0) / ((a + b - 1.0) * c * (a - 1.0));
    let (lhs, route) = b1_parts(a, b)?;
    parts(lhs, re(closed), route)
}

fn fint_1b(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    let (lhs, route) = b1_parts(a, b)?;
    parts(lhs, re(b1_base(a, b)?), route)
}

fn fint_1c(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    require(a > -b, "requires −b < a")?;
    // for a > 1 − b the pole i(a−1) enters the strip and the printed form no longer applies
    require(a < 1.0 - b, "requires a < 1 − b")?;
    require((2.0 * a + b - 1.0).abs() > 1e-6, "2a + b = 1 puts ζ at its pole")?;
    let closed = b1_base(a, b)? + PI * zr(2.0 * a + b)? / (2.0 * (a + b) * a);
    let (lhs, route) = b1_parts(a, b)?;
    parts(lhs, re(closed), route)
}

/// FintB1 at a = 1/4, b = 1 rewritten: the integrand is −1/16 of that one
/// after Re(i·x) = −Im(x).
fn fint1(_: &Params) -> Result<Parts> {
    let f = line(|v| {
        let w = zeta(1.25 - I * v) * (1.0 - 2.0 * I * v) * zeta(0.25 + I * v)
            / ((1.0 - I * v) * (5.0 - 4.0 * I * v) * (1.0 + 4.0 * I * v) * v);
        re(w.im)
    });
    let route = mult_route(0.25, 1.0, b1_shape())?.scaled(-1.0 / 16.0 / 2.5);
    let closed = PI * zr(0.5)? / 3.0 - PI * zr(0.25)? * zr(1.25)? / 10.0;
    parts(tail(f, 3.0 - growth(0.25), ZETA_REACH), re(closed), route)
}

const SQRT_REACH: f64 = 1e24;

fn fint_bx(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    let c = a + b;
    // −√(R1−a)/v + v²/(d√(R2+c)) rearranged so that no two large terms cancel
    let f = line(move |v| {
        let (r1, r2) = ((a * a + v * v).sqrt(), (c * c + v * v).sqrt());
        let (s1, s2) = ((r1 + a).sqrt(), (r2 + c).sqrt());
        let d = b * b + v * v;
        let v2 = v * v;
        let n = v2 * v2 * ((a * a - c * c) / (r1 + r2) - b) - (2.0 * b * b * v2 + b.powi(4)) * (r2 + c);
        re(n / ((v2 * s1 + d * s2) * d * s1 * s2) + b * s2 / d)
    });
    let route = mult_route(a, b, Shape { p: 1, q: -0.5, r: 0 })?.scaled(1.0 / SQRT_2);
    parts(tail(f, 1.5, SQRT_REACH), re(PI * (a / 2.0).sqrt()), route)
}

fn fint_bx2(_: &Params) -> Result<Parts> {
    let f = line(|v| {
        let r = (v * v + 1.0).sqrt();
        // 1/√v − √(R+1)/R over a common denominator
        re((1.0 - v - v / (r + v)) / (v.sqrt() * r * (r + (v * (r + 1.0)).sqrt())))
    });
    let lhs = tail(f, 1.5, SQRT_REACH).with_breaks(&[1.0]);
    parts(lhs, re(0.0), ResidueRoute::Constant(re(0.0)))
}

/// 1/ζ(s), continued through the pole at s = 1.
fn inv_zeta(s: C64) -> C64 {
    if (s - 1.0).norm() < 1e-6 {
        // 1/ζ(s) = (s−1) − γ(s−1)² + …
        let d = s - 1.0;
        d - g(0) * d * d
    } else {
        1.0 / zeta(s)
    }
}

fn g_shape() -> Shape {
    Shape { p: 1, q: 0.0, r: -1 }
}

/// ∫_0^∞ Re[(2v+ib)/(ζ(a+iv)(b−iv)ζ(a+b−iv)v)] = (1/2)∫(F(v) − F(−ib−v)).
fn g_integrand(a: f64, b: f64) -> LineFn {
    line(move |v| (2.0 * v + I * b) * inv_zeta(a + I * v) * inv_zeta(a + b - I * v) / ((b - I * v) * v))
}

fn fint_g1(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    require(b < a, "requires b < a")?;
    let lhs = damped_half(g_integrand(a, b)).real_part();
    let closed = PI / (2.0 * zr(a + b)? * zr(a)?);
    parts(lhs, re(closed), mult_route(a, b, g_shape())?.scaled(0.5))
}

fn fint_g1a(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let lhs = damped_half(g_integrand(1.0, b)).real_part();
    parts(lhs, re(0.0), mult_route(1.0, b, g_shape())?.scaled(0.5))
}

fn fint_g1b(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let f = line(move |v| {
        let w = inv_zeta(1.0 + I * v) * inv_zeta(1.0 + b - I * v);
        re((w / (b - I * v)).re - (w / v).im)
    });
    parts(damped_half(f), re(0.0), mult_route(1.0, b, g_shape())?.scaled(0.5))
}

/// π(a+b/2+2k)/(ζ'(−2k)(a+b+2k)ζ(2a+2k+b)(a+2k))
fn trivial_zero_term(a: f64, b: f64, k: u32) -> Result<f64> {
    let k = k as f64;
    let dz = zeta_d(re(-2.0 * k), 1).re;
    Ok(PI * (a + b / 2.0 + 2.0 * k) / (dz * (a + b + 2.0 * k) * zr(2.0 * a + 2.0 * k + b)? * (a + 2.0 * k)))
}

fn fint_g2(p: &Params) -> Result<Parts> {
    let (a, b) = (arg(p, "a"), arg(p, "b"));
    require(a + b < 0.5, "requires a + b < 1/2 (nontrivial zeros enter the strip otherwise)")?;
    let mut closed = PI / (2.0 * zr(a + b)? * zr(a)?);
    for k in 1..=64u32 {
        let y = a + 2.0 * k as f64;
        require((y + b).abs() > 1e-6 && y.abs() > 1e-6, "a trivial zero lies on the strip boundary")?;
        if -b < y && y < 0.0 {
            closed -= 2.0 * trivial_zero_term(a, b, k)?;
        }
    }
    require(closed.is_finite(), "closed form singular at these parameters")?;
    let power = 2.0 + growth(a) + growth(a + b);
    let lhs = tail(g_integrand(a, b), power, ZETA_REACH).real_part();
    parts(lhs, re(closed), mult_route(a, b, g_shape())?.scaled(0.5))
}

/// FintG2 at a = −9/2, b = 4 with the integrand scaled by −1/2.
fn fint_g3(_: &Params) -> Result<Parts> {
    let f = line(|v| (v + 2.0 * I) * inv_zeta(-4.5 + I * v) * inv_zeta(-0.5 - I * v) / ((I * v - 4.0) * v));
    let closed = 96.0 * PI.powi(5) / (7.0 * zr(5.0)?) - 64.0 * PI.powi(3) / zr(3.0)? - PI / (4.0 * zr(-0.5)? * zr(-4.5)?);
    let lhs = tail(f, 2.0 + growth(-4.5) + growth(-0.5), ZETA_REACH).real_part();
    parts(lhs, re(closed), mult_route(-4.5, 4.0, g_shape())?.scaled(-0.25))
}

/// p = 1, q = 3, r = 2 at a = 1/2, b = 3/2; the stated integrand is
/// −8(F(v) − F(−ib−v)).
fn fint_ab(_: &Params) -> Result<Parts> {
    let f = line(|v| {
        let (z1, z2) = (zeta(2.0 - I * v), zeta(0.5 + I * v));
        z1 * z1 * z2 * z2 * (18.0 * v * v + 27.0 * I * v - 32.0) * (4.0 * v + 3.0 * I)
            / ((1.5 - I * v) * (2.0 - I * v).powi(3) * (0.5 + I * v).powi(3) * v)
    });
    let z32 = zr(1.5)?;
    let closed = 32.0 * PI / 9.0
        * (-PI.powi(4) * zr(0.5)?.powi(2) / 4.0
            + (-23.0 * g(0) / 3.0 + 24.5) * z32 * z32
            + 23.0 * z32 * zeta_d(re(1.5), 1).re / 3.0);
    let lhs = tail(f, 4.0, ZETA_REACH).real_part();
    parts(lhs, re(closed), mult_route(0.5, 1.5, Shape { p: 1, q: 3.0, r: 2 })?.scaled(-4.0))
}
