use num_complex::Complex;

use super::{gamma::ln_gamma, SpecialFunctionContext};
use crate::{Error, Real, Result};

/// Radius of the excluded disk around s = 1.
pub const POLE_EXCLUSION: f64 = 1e-8;

fn cx<T: Real>(re: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::zero())
}

/// Euler–Maclaurin tail for Σ_{k≥0} (k+w)^{-s} starting at x = N + w.
/// Returns (tail, magnitude of last correction term).
fn em_tail<T: Real>(s: Complex<T>, x: T, ctx: &SpecialFunctionContext) -> (Complex<T>, T) {
    let one = cx::<T>(1.0);
    let lx = x.ln();
    let x_ms = (-s * lx).exp(); // x^{-s}
    let mut sum = x_ms * x / (s - one) + x_ms * T::lit(0.5);
    let mut poch = s * x_ms / x; // s x^{-s-1}
    let mut fact = T::lit(2.0);
    let x2 = x * x;
    let mut last = T::zero();
    for j in 1..=ctx.em_correction_order {
        let (num, den) = ctx.bernoulli[j - 1];
        let term = poch * (T::lit(num / den) / fact);
        sum = sum + term;
        last = term.norm();
        let k = T::lit((2 * j) as f64);
        poch = poch * (s + k - T::one()) * (s + k) / x2;
        fact = fact * (k + T::one()) * (k + T::lit(2.0));
    }
    (sum, last)
}

fn zeta_em<T: Real>(s: Complex<T>, ctx: &SpecialFunctionContext) -> (Complex<T>, T) {
    let n = ctx.em_terms + s.im.abs().ceil().to_usize().unwrap_or(0);
    let mut sum = Complex::new(T::zero(), T::zero());
    for k in (1..n).rev() {
        sum = sum + (-s * T::lit(k as f64).ln()).exp();
    }
    let (tail, err) = em_tail(s, T::lit(n as f64), ctx);
    (sum + tail, err)
}

/// A logarithm of sin z that stays finite for large |Im z|; the branch is
/// irrelevant once exponentiated.
fn ln_sin<T: Real>(z: Complex<T>) -> Complex<T> {
    let i = Complex::new(T::zero(), T::one());
    let two_i = Complex::new(T::zero(), T::lit(2.0));
    if z.im > T::lit(10.0) {
        // sin z = e^{−iz}(e^{2iz} − 1)/(2i)
        -i * z + (((i * z * T::lit(2.0)).exp() - T::one()) / two_i).ln()
    } else if z.im < T::lit(-10.0) {
        // sin z = e^{iz}(1 − e^{−2iz})/(2i)
        let one = Complex::new(T::one(), T::zero());
        i * z + ((one - (-i * z * T::lit(2.0)).exp()) / two_i).ln()
    } else {
        z.sin().ln()
    }
}

/// ζ(s) together with an error estimate.
pub fn riemann_zeta_err<T: Real>(s: Complex<T>, ctx: &SpecialFunctionContext) -> Result<(Complex<T>, T)> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {s:?}")));
    }
    if (s - cx::<T>(1.0)).norm() < T::lit(POLE_EXCLUSION) {
        return Err(Error::PoleAtOne);
    }
    if s.im < T::zero() {
        return riemann_zeta_err(s.conj(), ctx).map(|(z, e)| (z.conj(), e));
    }
    if s.re >= T::lit(-0.5) {
        return Ok(zeta_em(s, ctx));
    }
    // ζ(s) = (2π)^s / π · sin(πs/2) Γ(1−s) ζ(1−s)
    let one = cx::<T>(1.0);
    let pi = T::PI();
    let (z1, e1) = zeta_em(one - s, ctx);
    let lg = ln_gamma(one - s)?;
    let factor = (s * (T::lit(2.0) * pi).ln() + lg + ln_sin(s * pi * T::lit(0.5))).exp() / pi;
    Ok((factor * z1, factor.norm() * e1))
}

/// Riemann zeta function on the whole plane except s = 1.
pub fn riemann_zeta<T: Real>(s: Complex<T>, ctx: &SpecialFunctionContext) -> Result<Complex<T>> {
    let (z, err) = riemann_zeta_err(s, ctx)?;
    let allowed = T::lit(ctx.target_eps * 1e3) * (T::one() + z.norm());
    if err > allowed {
        return Err(Error::AccuracyLoss {
            estimate: err.to_f64().unwrap_or(f64::NAN),
            requested: ctx.target_eps,
        });
    }
    Ok(z)
}

/// Hurwitz zeta ζ(s, w) = Σ_{k≥0} (k+w)^{-s}, w > 0.
pub fn hurwitz_zeta<T: Real>(s: Complex<T>, w: T, ctx: &SpecialFunctionContext) -> Result<Complex<T>> {
    if !(w > T::zero()) {
        return Err(Error::Domain(format!("Hurwitz parameter must be positive, got {w:?}")));
    }
    if (s - cx::<T>(1.0)).norm() < T::lit(POLE_EXCLUSION) {
        return Err(Error::PoleAtOne);
    }
    if w == T::one() {
        return riemann_zeta(s, ctx);
    }
    let extra = (-s.re).max(T::zero()) + s.im.abs();
    let n = ctx.em_terms + extra.ceil().to_usize().unwrap_or(0);
    let mut sum = Complex::new(T::zero(), T::zero());
    for k in (0..n).rev() {
        sum = sum + (-s * (T::lit(k as f64) + w).ln()).exp();
    }
    let (tail, _) = em_tail(s, T::lit(n as f64) + w, ctx);
    Ok(sum + tail)
}

/// n-th derivative of ζ by trapezoidal sampling on a circle around s.
/// Returns the value and an error estimate.
pub fn zeta_derivative<T: Real>(
    s: Complex<T>,
    n: usize,
    ctx: &SpecialFunctionContext,
) -> Result<(Complex<T>, T)> {
    if n > 12 {
        return Err(Error::Domain(format!("derivative order {n} > 12")));
    }
    if n == 0 {
        return riemann_zeta_err(s, ctx);
    }
    let dist = (s - cx::<T>(1.0)).norm();
    if dist < T::lit(POLE_EXCLUSION) {
        return Err(Error::PoleAtOne);
    }
    let r = T::lit(0.25).min(dist * T::lit(0.5));
    let mut nfact = T::one();
    for k in 2..=n {
        nfact = nfact * T::lit(k as f64);
    }
    let scale = nfact / r.powi(n as i32);
    let sample = |m: usize| -> Result<(Complex<T>, T)> {
        let mut acc = Complex::new(T::zero(), T::zero());
        let mut peak = T::zero();
        for k in 0..m {
            let th = T::lit(2.0) * T::PI() * T::lit(k as f64) / T::lit(m as f64);
            let e = Complex::new(th.cos(), th.sin());
            let z = riemann_zeta_err(s + e * r, ctx)?.0;
            peak = peak.max(z.norm());
            acc = acc + z * Complex::new((th * T::lit(n as f64)).cos(), -(th * T::lit(n as f64)).sin());
        }
        Ok((acc * scale / T::lit(m as f64), peak))
    };
    let mut m = 64;
    let (mut prev, peak) = sample(m)?;
    let floor = scale * peak * T::epsilon() * T::lit(64.0);
    loop {
        m *= 2;
        let (cur, _) = sample(m)?;
        let diff = (cur - prev).norm();
        let tol = (T::lit(1e-12) * cur.norm().max(T::one())).max(floor);
        if diff <= tol {
            return Ok((cur, diff + floor));
        }
        if m >= 4096 {
            return Err(Error::AccuracyLoss {
                estimate: diff.to_f64().unwrap_or(f64::NAN),
                requested: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        prev = cur;
    }
}
