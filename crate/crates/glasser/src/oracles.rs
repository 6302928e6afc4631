//! Quadrature-free ground truths used to cross-check catalog entries.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex;

use crate::specfun::{euler_number_f64, zeta_derivative, SpecialFunctionContext};
use crate::{catalog, master, Error, Result, C64};

/// j-th term of the Dirichlet expansion of ∫_0^∞ ζ_R(3/2+iv) sech(πv) dv:
/// j^{−3/2}·√j/(j+1) = 1/(j(j+1)).
pub fn dirichlet_intg5b_term(j: u64) -> f64 {
    let jf = j as f64;
    jf.powf(-1.5) * jf.sqrt() / (jf + 1.0)
}

/// Partial sum over j = 1..=n, summed directly.
pub fn dirichlet_intg5b_partial(n: u64) -> f64 {
    // smallest terms first
    (1..=n).rev().map(dirichlet_intg5b_term).sum()
}

/// The full series Σ 1/(j(j+1)), which telescopes to 1.
pub fn dirichlet_intg5b() -> f64 {
    // Σ_{j≤J} = 1 − 1/(J+1); the limit is exact
    1.0
}

/// Termwise evaluation of ∫ ζ(a+b−iv)/(a+b−iv) dv through the cosine and
/// sine integrals: J1_j = π j^{−(a+b)}, J2_j = π j^{−(a+b)} for j > 1 and 0
/// for j = 1. Each j ≥ 2 contribution cancels, leaving π.
pub fn appendix_b_value(a: f64, b: f64) -> Result<f64> {
    let s = a + b;
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("a + b must exceed 1, got {s}")));
    }
    let mut total = 0.0;
    let mut j = 1u64;
    loop {
        let w = (j as f64).powf(-s);
        let j1 = PI * w;
        let j2 = if j == 1 { 0.0 } else { PI * w };
        total += j1 - j2;
        if j1 < 1e-18 || j > 1_000_000 {
            break;
        }
        j += 1;
    }
    Ok(total)
}

/// ∫ ζ(c−iv) x^{−iv}/(c−iv) dv for c > 1, x > 0, termwise: the n-th Dirichlet
/// term n^{−c}e^{−iv ln(x/n)}/(c−iv) contributes 2π x^{−c} when n < x (pole
/// at v = −ic), π n^{−c} when n = x and nothing when n > x.
pub fn dirichlet_shift_integral(c: f64, x: f64) -> Result<f64> {
    if !(c > 1.0) || !(x > 0.0) || !c.is_finite() || !x.is_finite() {
        return Err(Error::Domain(format!("need c > 1 and x > 0, got c = {c}, x = {x}")));
    }
    let below = (x.ceil() - 1.0).max(0.0);
    let on = if x.fract() == 0.0 { PI * x.powf(-c) } else { 0.0 };
    Ok(2.0 * PI * x.powf(-c) * below + on)
}

/// −2 + 2√2 Σ_{k<n} (−1/4)^k C(2k,k) as an exact (p, q) pair with
/// value p/q·√2 − 2, before the parity sign.
fn binomial_partial(n: u32) -> (i128, i128) {
    // Σ_{k<n} (−1)^k C(2k,k) 4^{n−1−k} / 4^{n−1}
    let mut num: i128 = 0;
    let mut c: i128 = 1; // C(2k, k)
    for k in 0..n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        num += sign * c * 4i128.pow(n - 1 - k);
        c = c * (2 * k as i128 + 1) * (2 * k as i128 + 2) / ((k as i128 + 1) * (k as i128 + 1));
    }
    (num, 4i128.pow(n - 1))
}

/// The binomial sum as printed: −2 + 2√2 Σ_{k=0}^{n−1} (−1/4)^k C(2k,k).
pub fn oeis_sum_printed(n: u32) -> Result<f64> {
    if n == 0 || n > 40 {
        return Err(Error::Domain(format!("n must lie in 1..=40, got {n}")));
    }
    let (p, q) = binomial_partial(n);
    Ok(-2.0 + 2.0 * SQRT_2 * (p as f64 / q as f64))
}

/// ∫ sech(πv/2) sechⁿ(πv) dv in closed form: the printed binomial sum with
/// the parity sign (−1)^{n+1}.
pub fn oeis_sum(n: u32) -> Result<f64> {
    let s = oeis_sum_printed(n)?;
    Ok(if n % 2 == 1 { s } else { -s })
}

/// −(1+2b²)/(12|b|) + (1/|b|) Σ_{j=1}^{⌈|b|/2⌉−1} cot(jπ/b) csc(jπ/b).
pub fn test2g_rhs(b: f64) -> Result<f64> {
    if b == 0.0 || !b.is_finite() {
        return Err(Error::Domain("b must be finite and nonzero".into()));
    }
    let ab = b.abs();
    let jmax = (ab / 2.0).ceil() as i64 - 1;
    let mut sum = 0.0;
    for j in 1..=jmax {
        let x = j as f64 * PI / b;
        let s = x.sin();
        if s.abs() < 1e-12 {
            return Err(Error::Domain(format!("csc singular at j = {j}, b = {b}")));
        }
        sum += x.cos() / (s * s);
    }
    Ok(-(1.0 + 2.0 * b * b) / (12.0 * ab) + sum / ab)
}

/// (1/2) Σ_{j≤N} E_{2j}(ζ^{(2j)}(it) + ζ^{(2j)}(1+it))/(2^{2j}(2j)!) − 2/(π cosh πt)
/// and its distance from ζ(1/2+it).
pub fn zid_approximation(t: f64, n: usize, ctx: &SpecialFunctionContext) -> Result<(C64, f64)> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    if n > 6 || (n as f64) > t * t / 10.0 {
        return Err(Error::Domain(format!("need N ≤ 6 and N ≤ t²/10 (N = {n}, t = {t})")));
    }
    let mut acc = C64::new(0.0, 0.0);
    let mut fact = 1.0f64; // (2j)!
    for j in 0..=n {
        if j > 0 {
            fact *= (2 * j - 1) as f64 * (2 * j) as f64;
        }
        let e = euler_number_f64(2 * j, ctx)?;
        let (d0, _) = zeta_derivative(Complex::new(0.0, t), 2 * j, ctx)?;
        let (d1, _) = zeta_derivative(Complex::new(1.0, t), 2 * j, ctx)?;
        acc += (d0 + d1) * (e / (4f64.powi(j as i32) * fact));
    }
    let value = acc * 0.5 - 2.0 / (PI * (PI * t).cosh());
    let exact = crate::specfun::riemann_zeta(Complex::new(0.5, t), ctx)?;
    Ok((value, (value - exact).norm()))
}

/// (quadrature, closed form) for the mixed sinh/cosh integral standing in
/// for the limit b → 1/√2 of the four-pole family.
pub fn ded1_check(settings: &master::VerificationSettings) -> Result<(f64, f64)> {
    let entry = catalog::find("Ded1")?;
    let bound = entry.bind(&entry.default_params())?;
    let lhs = bound.lhs.integrate(&settings.integration)?;
    Ok((lhs.value.re, bound.closed_form.re))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_sum_first_values() {
        assert!((oeis_sum(1).unwrap() - (2.0 * SQRT_2 - 2.0)).abs() < 1e-15);
        assert!((oeis_sum_printed(2).unwrap() - (SQRT_2 - 2.0)).abs() < 1e-15);
        assert!((oeis_sum(2).unwrap() - (2.0 - SQRT_2)).abs() < 1e-15);
    }

    #[test]
    fn dirichlet_partial_sums_telescope() {
        for n in [1u64, 2, 10, 1000] {
            let expect = 1.0 - 1.0 / (n as f64 + 1.0);
            assert!((dirichlet_intg5b_partial(n) - expect).abs() < 1e-14);
        }
        assert!((dirichlet_intg5b_term(4) - 0.05).abs() < 1e-16);
    }

    #[test]
    fn termwise_value_is_pi() {
        assert_eq!(appendix_b_value(0.5, 1.0).unwrap(), PI);
        assert_eq!(appendix_b_value(3.0, 0.5).unwrap(), PI);
        assert!(appendix_b_value(0.2, 0.3).is_err());
    }

    #[test]
    fn test2g_small_b() {
        assert!((test2g_rhs(1.0).unwrap() + 0.25).abs() < 1e-15);
        assert_eq!(test2g_rhs(-2.6).unwrap(), test2g_rhs(2.6).unwrap());
        assert!(test2g_rhs(0.0).is_err());
    }

    #[test]
    fn zid_guard() {
        let ctx = SpecialFunctionContext::default();
        assert!(zid_approximation(1.0, 1, &ctx).is_err());
        assert!(zid_approximation(30.0, 7, &ctx).is_err());
    }
}
