//! Trigonometric kernels cos^s(π(b/2−iv))/cosh(πv/b) and
//! sin^s(π(b/2−iv))/cosh(πv/b), their finite-interval rewrites and the
//! s-derivatives at b = 1/2.

use super::fns::*;
use super::{CatalogEntry, Family, Param, Params, Parts};
use crate::master::{Kernel, Lhs, ResidueRoute};
use crate::oracles::{oeis_sum, test2g_rhs};
use crate::quadrature::EndpointSingularity;
use crate::residues::poles_trig;
use crate::{Result, C64};

const S51: &str = "5.1";
const S52: &str = "5.2";
const S53: &str = "5.3";

pub fn entries() -> Vec<CatalogEntry> {
    let s_neg = || Param::open("s", 1.0, -4.0, 2.0);
    vec![
        CatalogEntry::new("CR1", S51, Family::TrigCosine, cr1)
            .param(Param::open("b", 0.5, -1.0, 1.0))
            .param(Param::open("s", 1.0, 0.0, 4.0))
            .expr("|b|")
            .notes("requires 0 < s ≤ 1/|b| − 0.1"),
        CatalogEntry::new("Cr2a", S51, Family::TrigCosine, cr2a)
            .param(Param::open("b", 0.5, -1.0, 1.0))
            .param(Param::open("s", 1.0, 0.0, 4.0))
            .expr("π|b|")
            .notes("CR1 after v → tanh(πv); B = tan(πb/2); 0 < s ≤ 1/|b| − 0.1"),
        CatalogEntry::new("Cg", S51, Family::TrigCosine, cg)
            .param(Param::closed("n", 2.0, 1.0, 6.0))
            .expr("(−1)^{n+1}(−2 + 2√2 Σ_{k<n} (−1/4)^k C(2k,k))")
            .notes("the printed sum without the parity sign holds for odd n only"),
        CatalogEntry::new("B4a", S51, Family::TrigCosine, b4a).expr("4 − √(1490 − 497√2)/8"),
        CatalogEntry::new("C4s", S51, Family::TrigCosine, c4s).expr("4 − √(11978 + 809√2)/32"),
        CatalogEntry::new("CR2b", S51, Family::TrigCosine, cr2b)
            .param(s_neg())
            .expr("2^{−1+s/2}π")
            .notes("b = 1/2; s in (0, 1.9] or a negative integer"),
        CatalogEntry::new("Cr2bd", S52, Family::TrigDifferentiated, cr2bd)
            .param(s_neg())
            .expr("−π·2^{−1+s/2}·ln 2")
            .notes("−2 d/ds of CR2b; the printed exponent 1 − s/2 is replaced by −1 + s/2"),
        CatalogEntry::new("Q1", S52, Family::TrigDifferentiated, q1).expr("−π ln2/√2"),
        CatalogEntry::new("Q2", S52, Family::TrigDifferentiated, q2).expr("π√2 ln2/4"),
        CatalogEntry::new("Q1mQ2", S52, Family::TrigDifferentiated, q1m_q2).expr("−3π√2 ln2/8"),
        CatalogEntry::new("Q1pQ2", S52, Family::TrigDifferentiated, q1p_q2).expr("−π√2 ln2/8"),
        CatalogEntry::new("Sintm2", S53, Family::TrigSine, sintm2)
            .param(Param::open("b", 1.0, -2.0, 2.0))
            .expr("−(1+2b²)/(12|b|)"),
        CatalogEntry::new("Test2G", S53, Family::TrigSine, test2g)
            .param(Param::open("b", 2.6, -6.0, 6.0))
            .expr("−(1+2b²)/(12|b|) + (1/|b|) Σ_{j=1}^{⌈|b|/2⌉−1} cot(jπ/b) csc(jπ/b)")
            .notes("|b| must not be an even integer (zeros of the sine on the strip boundary)"),
        CatalogEntry::new("Shalf7", S53, Family::TrigSine, shalf7)
            .expr("17/28 − 2cot(2π/7)csc(2π/7)/7")
            .notes("equals −Test2G at b = 7/2"),
        CatalogEntry::new("Sint4", S53, Family::TrigSine, sint4)
            .param(Param::open("b", 1.0, -2.0, 2.0))
            .expr("(88b⁴ + 40b² + 7)/(720|b|³)")
            .notes("printed with b³; the integral is even in b"),
    ]
}

/// ln cosh x without overflow.
fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

fn power(z: C64, s: f64) -> C64 {
    if s.fract() == 0.0 {
        z.powi(s as i32)
    } else {
        z.powf(s)
    }
}

/// cos^s(π(b/2−iv))/cosh(πv/b) or the sine analogue.
fn trig_kernel(b: f64, s: f64, sine: bool) -> Kernel {
    kernel(move |v| {
        let z = PI * (b / 2.0 - I * v);
        let t = if sine { z.sin() } else { z.cos() };
        power(t, s) / (PI * v / b).cosh()
    })
}

fn trig_route(k: &Kernel, b: f64, s: f64, sine: bool) -> Result<ResidueRoute> {
    master(k, b, crate::master::CriterionKind::Antisymmetric, poles_trig(b, s, sine)?)
}

fn cos_route(b: f64, s: f64) -> Result<ResidueRoute> {
    trig_route(&trig_kernel(b, s, false), b, s, false)
}

fn cr1_checks(b: f64, s: f64) -> Result<()> {
    require(b != 0.0, "b must be nonzero")?;
    require(s > 0.0, "requires s > 0")?;
    // keeps the decay rate π(1/|b| − s) and the Cr2a endpoint exponent away from the limit
    require(s <= 1.0 / b.abs() - 0.1, "requires s ≤ 1/|b| − 0.1")
}

fn cr1(p: &Params) -> Result<Parts> {
    let (b, s) = (arg(p, "b"), arg(p, "s"));
    cr1_checks(b, s)?;
    let sn2 = (PI * b / 2.0).sin().powi(2);
    let tb = (PI * b / 2.0).tan();
    let f = line(move |v| {
        let x = PI * v;
        // ln(cosh²x − sin²) = 2 ln cosh x + ln(1 − sin²/cosh²x)
        let lc = ln_cosh(x);
        let base = 2.0 * lc + (-sn2 * (-2.0 * lc).exp()).ln_1p();
        re((s / 2.0 * base - ln_cosh(x / b)).exp() * (s * (tb * x.tanh()).atan()).cos())
    });
    let lhs = Lhs::new(f, crate::master::Domain::Line { decay: PI * (1.0 / b.abs() - s) });
    parts(lhs, re(b.abs()), cos_route(b, s)?)
}

fn cr2a(p: &Params) -> Result<Parts> {
    let (b, s) = (arg(p, "b"), arg(p, "s"));
    cr1_checks(b, s)?;
    let bb = (PI * b / 2.0).tan();
    let pre = (PI * b / 2.0).cos().powf(s);
    let f = std::sync::Arc::new(move |v: f64, dlo: f64, dhi: f64| {
        let w = dlo * dhi; // 1 − v²
        let u = 0.5 * (dlo / dhi).ln(); // arctanh v
        let ln_mag = s / 2.0 * ((bb * v).powi(2).ln_1p() - w.ln()) - ln_cosh(u / b) - w.ln();
        re(pre * ln_mag.exp() * (s * (bb * v).atan()).cos())
    });
    let alpha = 1.0 + s / 2.0 - 1.0 / (2.0 * b.abs());
    let lhs = Lhs::finite(f, -1.0, 1.0, EndpointSingularity::InversePower(alpha));
    parts(lhs, re(PI * b.abs()), cos_route(b, s)?.scaled(PI))
}

fn int_n(p: &Params, name: &str) -> Result<u32> {
    let n = arg(p, name);
    require(n.fract() == 0.0 && n >= 0.0, &format!("{name} must be a non-negative integer"))?;
    Ok(n as u32)
}

/// ∫ sech(πv/b) sechⁿ(πv) over the line with its antisymmetric route; the
/// poles coincide with those of the cosine kernel at s = −n.
fn sech_power_parts(b: f64, n: u32) -> Result<(Lhs, ResidueRoute)> {
    let k = kernel(move |v| sech(PI * v / b) * sech(PI * v).powi(n as i32));
    let route = trig_route(&k, b, -(n as f64), false)?;
    Ok((full_line(&k, PI * (n as f64 + 1.0 / b)), route))
}

fn cg(p: &Params) -> Result<Parts> {
    let n = int_n(p, "n")?;
    require(n >= 1, "n must be at least 1")?;
    let (lhs, route) = sech_power_parts(2.0, n)?;
    parts(lhs, re(oeis_sum(n)?), route)
}

fn b4a(_: &Params) -> Result<Parts> {
    let (lhs, route) = sech_power_parts(4.0, 3)?;
    parts(lhs, re(4.0 - (1490.0 - 497.0 * SQRT_2).sqrt() / 8.0), route)
}

fn c4s(_: &Params) -> Result<Parts> {
    let (lhs, route) = sech_power_parts(4.0, 4)?;
    parts(lhs, re(4.0 - (11978.0 + 809.0 * SQRT_2).sqrt() / 32.0), route)
}

fn cr2b_checks(s: f64) -> Result<()> {
    // s → 2 makes the endpoint singularity non-integrable; stop at 1.9
    require((s > 0.0 && s <= 1.9) || (s < 0.0 && s.fract() == 0.0), "s must lie in (0, 1.9] or be a negative integer")
}

/// (1+v²)^{s/2−1}(1−v²)^{−s/2} as a function of (v, 1−v²).
fn cr2b_weight(s: f64, v: f64, w: f64) -> f64 {
    ((s / 2.0 - 1.0) * (v * v).ln_1p() - s / 2.0 * w.ln()).exp()
}

fn endpoint(s: f64) -> EndpointSingularity {
    // logarithmic factors need a little room beyond the algebraic exponent
    let alpha = s.max(0.0) / 2.0;
    EndpointSingularity::InversePower(alpha + 0.05 * (1.0 - alpha))
}

fn cr2b(p: &Params) -> Result<Parts> {
    let s = arg(p, "s");
    cr2b_checks(s)?;
    let f = std::sync::Arc::new(move |v: f64, dlo: f64, dhi: f64| re(cr2b_weight(s, v, dlo * dhi) * (s * v.atan()).cos()));
    let lhs = Lhs::finite(f, -1.0, 1.0, endpoint(s));
    // v = tanh(πu) maps CR1 at b = 1/2 onto this integral times 2^{−s/2}/π
    let route = cos_route(0.5, s)?.scaled(PI * 2f64.powf(s / 2.0));
    parts(lhs, re(2f64.powf(s / 2.0 - 1.0) * PI), route)
}

/// −2 d/ds of the CR2b route. The CR1 residue sum does not depend on s, so
/// only the prefactor π·2^{s/2} is differentiated.
fn cr2bd_route(s: f64) -> Result<ResidueRoute> {
    Ok(cos_route(0.5, s)?.scaled(-PI * 2f64.powf(s / 2.0) * std::f64::consts::LN_2))
}

fn cr2bd(p: &Params) -> Result<Parts> {
    let s = arg(p, "s");
    cr2b_checks(s)?;
    let f = std::sync::Arc::new(move |v: f64, dlo: f64, dhi: f64| {
        let w = dlo * dhi;
        let (at, l) = (v.atan(), w.ln() - (v * v).ln_1p());
        re(cr2b_weight(s, v, w) * (l * (s * at).cos() + 2.0 * at * (s * at).sin()))
    });
    let lhs = Lhs::finite(f, -1.0, 1.0, endpoint(s));
    parts(lhs, re(-PI * 2f64.powf(s / 2.0 - 1.0) * std::f64::consts::LN_2), cr2bd_route(s)?)
}

/// ln((1−v²)/(1+v²)) from (v, 1−v²).
fn log_ratio(v: f64, w: f64) -> f64 {
    w.ln() - (v * v).ln_1p()
}

fn finite(f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static, s: f64) -> Lhs {
    Lhs::finite(std::sync::Arc::new(move |v: f64, dlo: f64, dhi: f64| re(f(v, dlo * dhi))), -1.0, 1.0, endpoint(s))
}

fn ln2() -> f64 {
    std::f64::consts::LN_2
}

fn q1(_: &Params) -> Result<Parts> {
    let lhs = finite(|v, w| (2.0 * v * v.atan() + log_ratio(v, w)) / ((v * v + 1.0) * w.sqrt()), 1.0);
    parts(lhs, re(-PI * ln2() / SQRT_2), cr2bd_route(1.0)?)
}

fn q2(_: &Params) -> Result<Parts> {
    let lhs = finite(|v, w| w.sqrt() * (2.0 * v * v.atan() - log_ratio(v, w)) / (v * v + 1.0).powi(2), 0.0);
    parts(lhs, re(PI * SQRT_2 * ln2() / 4.0), cr2bd_route(-1.0)?.scaled(-1.0))
}

/// (Q1 ∓ Q2)/2 routes; the Q2 route is −Cr2bd at s = −1.
fn q_route(sign: f64) -> Result<ResidueRoute> {
    Ok(lin(vec![(0.5, cr2bd_route(1.0)?), (0.5 * sign, cr2bd_route(-1.0)?)]))
}

fn q1m_q2(_: &Params) -> Result<Parts> {
    let lhs = finite(|v, w| (log_ratio(v, w) + 2.0 * v.powi(3) * v.atan()) / (w.sqrt() * (v * v + 1.0).powi(2)), 1.0);
    parts(lhs, re(-3.0 * PI * SQRT_2 * ln2() / 8.0), q_route(1.0)?)
}

fn q1p_q2(_: &Params) -> Result<Parts> {
    let lhs = finite(|v, w| (v * v * log_ratio(v, w) + 2.0 * v * v.atan()) / (w.sqrt() * (v * v + 1.0).powi(2)), 1.0);
    parts(lhs, re(-PI * SQRT_2 * ln2() / 8.0), q_route(-1.0)?)
}

/// (cosh2πv·cos πb − 1)/(cosh(πv/b)(cosh2πv − cos πb)²) = −(1/2)(F(v) + F(−v)),
/// F the sine kernel at s = −2.
fn sine2_parts(b: f64) -> Result<(Lhs, ResidueRoute)> {
    require(b != 0.0, "b must be nonzero")?;
    let half = b.abs() / 2.0;
    require((half - half.round()).abs() > 1e-6, "|b| must not be an even integer")?;
    let cb = (PI * b).cos();
    let f = line(move |v| {
        // divide through by cosh²(2πv) to stay finite
        let c2 = (2.0 * PI * v).cosh();
        let num = cb - 1.0 / c2;
        let den = (1.0 - cb / c2).powi(2) * c2;
        re(num / (den * (PI * v / b).cosh()))
    });
    let lhs = Lhs::new(f, crate::master::Domain::Line { decay: 2.0 * PI + PI / b.abs() });
    let route = trig_route(&trig_kernel(b, -2.0, true), b, -2.0, true)?.scaled(-0.5);
    Ok((lhs, route))
}

fn sintm2(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let (lhs, route) = sine2_parts(b)?;
    parts(lhs, re(-(1.0 + 2.0 * b * b) / (12.0 * b.abs())), route)
}

fn test2g(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    let (lhs, route) = sine2_parts(b)?;
    parts(lhs, re(test2g_rhs(b)?), route)
}

fn shalf7(_: &Params) -> Result<Parts> {
    let k = kernel(|v| sech(2.0 * PI * v / 7.0) * sech(2.0 * PI * v).powi(2));
    let x = 2.0 * PI / 7.0;
    let closed = 17.0 / 28.0 - 2.0 * x.cos() / (x.sin().powi(2) * 7.0);
    let (_, route) = sine2_parts(3.5)?;
    parts(full_line(&k, 4.0 * PI + 2.0 * PI / 7.0), re(closed), route.scaled(-1.0))
}

fn sint4(p: &Params) -> Result<Parts> {
    let b = arg(p, "b");
    require(b != 0.0, "b must be nonzero")?;
    let (cb, c2b) = ((PI * b).cos(), (2.0 * PI * b).cos());
    let f = line(move |v| {
        // numerator and denominator scaled by cosh⁴(2πv)
        let c2 = (2.0 * PI * v).cosh();
        let c4 = (4.0 * PI * v).cosh();
        let num = (c2b * c4 / c2 - 4.0 * cb + 3.0 / c2) / c2;
        let den = (1.0 - cb / c2).powi(4) * c2 * c2;
        re(num / (den * (PI * v / b).cosh()))
    });
    let lhs = Lhs::new(f, crate::master::Domain::Line { decay: 4.0 * PI + PI / b.abs() });
    let closed = (88.0 * b.powi(4) + 40.0 * b * b + 7.0) / (720.0 * b.abs().powi(3));
    // the stated integrand is (F(v) + F(−v))/2 for the sine kernel at s = −4
    let route = trig_route(&trig_kernel(b, -4.0, true), b, -4.0, true)?.scaled(0.5);
    parts(lhs, re(closed), route)
}
