//! Complex special functions: Riemann and Hurwitz zeta, Gamma, zeta
//! derivatives, Stieltjes constants, Euler numbers, Υ and ξ.

mod gamma;
mod tables;
mod zeta;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

pub use gamma::{gamma, ln_gamma};
pub use zeta::{hurwitz_zeta, riemann_zeta, riemann_zeta_err, zeta_derivative, POLE_EXCLUSION};

use crate::{Error, Real, Result};

/// Largest Euler-number index kept in the cache.
pub const MAX_EULER_INDEX: usize = 40;

/// Evaluation policy plus eagerly built constant tables. Immutable after
/// construction, so it can be shared freely between threads.
#[derive(Debug, Clone)]
pub struct SpecialFunctionContext {
    pub em_terms: usize,
    pub em_correction_order: usize,
    pub target_eps: f64,
    bernoulli: Vec<(f64, f64)>,
    stieltjes: Vec<f64>,
    euler: Vec<BigInt>,
}

impl Default for SpecialFunctionContext {
    fn default() -> Self {
        Self::new(25, 12, 1e-13).expect("default context is valid")
    }
}

impl SpecialFunctionContext {
    pub fn new(em_terms: usize, em_correction_order: usize, target_eps: f64) -> Result<Self> {
        if em_terms < 2 {
            return Err(Error::Domain("em_terms must be at least 2".into()));
        }
        if em_correction_order < 1 || em_correction_order > tables::BERNOULLI_EVEN.len() {
            return Err(Error::Domain(format!(
                "em_correction_order must lie in 1..={}",
                tables::BERNOULLI_EVEN.len()
            )));
        }
        if !(target_eps > 0.0) {
            return Err(Error::Domain("target_eps must be positive".into()));
        }
        Ok(Self {
            em_terms,
            em_correction_order,
            target_eps,
            bernoulli: tables::BERNOULLI_EVEN.to_vec(),
            stieltjes: tables::STIELTJES.to_vec(),
            euler: euler_table(MAX_EULER_INDEX / 2),
        })
    }

    pub fn bernoulli_cache(&self) -> &[(f64, f64)] {
        &self.bernoulli
    }

    pub fn stieltjes_cache(&self) -> &[f64] {
        &self.stieltjes
    }

    pub fn euler_number_cache(&self) -> &[BigInt] {
        &self.euler
    }
}

fn euler_table(n: usize) -> Vec<BigInt> {
    // Σ_k C(2m, 2k) E_{2k} = 0 for m ≥ 1
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::zero();
        let mut binom = BigInt::one(); // C(2m, 0)
        for k in 0..m {
            acc += &binom * &e[k];
            // C(2m, 2k) -> C(2m, 2k+2)
            let (a, b) = (2 * m - 2 * k, 2 * k + 1);
            binom = binom * BigInt::from(a) * BigInt::from(a - 1) / (BigInt::from(b) * BigInt::from(b + 1));
        }
        e.push(-acc);
    }
    e
}

/// Stieltjes constant γ_j, 0 ≤ j ≤ 8.
pub fn stieltjes_constant(j: usize, ctx: &SpecialFunctionContext) -> Result<f64> {
    ctx.stieltjes
        .get(j)
        .copied()
        .ok_or_else(|| Error::Domain(format!("Stieltjes table holds j ≤ 8, got {j}")))
}

/// Truncated Laurent series of ζ about s = 1 using γ_0..=γ_jmax.
pub fn zeta_laurent<T: Real>(s: Complex<T>, jmax: usize, ctx: &SpecialFunctionContext) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let d = s - one;
    let mut acc = one / d;
    let mut pw = one;
    let mut fact = T::one();
    for j in 0..=jmax.min(ctx.stieltjes.len() - 1) {
        if j > 0 {
            pw = pw * d;
            fact = fact * T::lit(j as f64);
        }
        let sign = if j % 2 == 0 { T::one() } else { -T::one() };
        acc = acc + pw * (sign * T::lit(ctx.stieltjes[j]) / fact);
    }
    acc
}

/// Euler number ℰ_k (k even, k ≤ 40).
pub fn euler_number(k: usize, ctx: &SpecialFunctionContext) -> Result<BigInt> {
    if k % 2 == 1 {
        return Err(Error::Domain(format!("Euler numbers of odd index vanish; got k = {k}")));
    }
    ctx.euler
        .get(k / 2)
        .cloned()
        .ok_or_else(|| Error::Domain(format!("Euler number index {k} > {MAX_EULER_INDEX}")))
}

/// ℰ_k as a float.
pub fn euler_number_f64(k: usize, ctx: &SpecialFunctionContext) -> Result<f64> {
    use num_traits::ToPrimitive;
    Ok(euler_number(k, ctx)?.to_f64().unwrap_or(f64::NAN))
}

/// Υ(s) = ζ(s) Γ(s/2) π^{−s/2}.
pub fn upsilon<T: Real>(s: Complex<T>, ctx: &SpecialFunctionContext) -> Result<Complex<T>> {
    if s.re >= T::lit(0.5) {
        let z = riemann_zeta(s, ctx)?;
        let half = s * T::lit(0.5);
        return Ok(z * (ln_gamma(half)? - half * T::PI().ln()).exp());
    }
    // Γ(s/2) has poles here that ζ's trivial zeros cancel; go through ξ.
    if s.norm() < T::lit(1e-12) {
        return Err(Error::Domain("Υ has a pole at s = 0".into()));
    }
    let one = Complex::new(T::one(), T::zero());
    Ok(xi(s, ctx)? * T::lit(2.0) / (s * (s - one)))
}

/// ξ(s) = s(s−1)Υ(s)/2, entire.
pub fn xi<T: Real>(s: Complex<T>, ctx: &SpecialFunctionContext) -> Result<Complex<T>> {
    let one = Complex::new(T::one(), T::zero());
    if s.re < T::lit(0.5) {
        return xi(one - s, ctx);
    }
    if (s - one).norm() < T::lit(1e-2) {
        // mean value over a circle avoids the removable singularity
        let m = 32;
        let r = T::lit(0.1);
        let mut acc = Complex::new(T::zero(), T::zero());
        for k in 0..m {
            let th = T::lit(2.0) * T::PI() * T::lit(k as f64) / T::lit(m as f64);
            acc = acc + xi(s + Complex::new(th.cos(), th.sin()) * r, ctx)?;
        }
        return Ok(acc / T::lit(m as f64));
    }
    Ok(s * (s - one) * T::lit(0.5) * upsilon(s, ctx)?)
}
