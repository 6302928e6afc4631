//! Adaptive Gauss–Kronrod quadrature for exponentially damped complex
//! integrands on the real line, the half line and finite intervals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex;

use crate::{Error, Real, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Which component of a complex integrand is integrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    FullValue,
    RealPartOnly,
    ImaginaryPartOnly,
}

/// Endpoint behaviour for [`integrate_finite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EndpointSingularity {
    None,
    /// (1−v²)^{−1/2}-type behaviour at both ends; cosine substitution.
    InverseSqrtBoth,
    /// (1−v²)^{−α} with α < 1 at both ends; v = tanh(u) substitution.
    InversePower(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegrationSettings {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub tail_cutoff_eps: f64,
    pub mode: Mode,
    /// Largest initial panel width.
    pub panel_cap: f64,
}

impl Default for IntegrationSettings {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            max_subdivisions: 20_000,
            tail_cutoff_eps: 1e-16,
            mode: Mode::FullValue,
            panel_cap: 0.5,
        }
    }
}

impl IntegrationSettings {
    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.tail_cutoff_eps > 0.0) {
            return Err(Error::Domain("tolerances must be positive".into()));
        }
        if self.max_subdivisions < 1 || !(self.panel_cap > 0.0) {
            return Err(Error::Domain("max_subdivisions ≥ 1 and panel_cap > 0 required".into()));
        }
        Ok(())
    }

    fn tolerance<T: Real>(&self, value: Complex<T>) -> T {
        T::lit(self.abs_tol).max(T::lit(self.rel_tol) * value.norm())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationResult<T> {
    pub value: Complex<T>,
    pub error_estimate: T,
    pub evaluations: usize,
    pub converged: bool,
}

impl<T: Real> IntegrationResult<T> {
    fn zero() -> Self {
        Self {
            value: Complex::new(T::zero(), T::zero()),
            error_estimate: T::zero(),
            evaluations: 0,
            converged: true,
        }
    }

    /// Sum of two independent pieces.
    pub fn combine(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }

    pub fn scale(self, k: T) -> Self {
        Self {
            value: self.value * k,
            error_estimate: self.error_estimate * k.abs(),
            ..self
        }
    }
}

fn project<T: Real>(z: Complex<T>, mode: Mode, v: T) -> Result<Complex<T>> {
    let out = match mode {
        Mode::FullValue => z,
        Mode::RealPartOnly => Complex::new(z.re, T::zero()),
        Mode::ImaginaryPartOnly => Complex::new(T::zero(), z.im),
    };
    if out.re.is_finite() && out.im.is_finite() {
        Ok(out)
    } else {
        Err(Error::SingularSample(format!("{v:?}")))
    }
}

struct Panel<T> {
    a: T,
    b: T,
    value: Complex<T>,
    err: T,
}

impl<T: Real> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: Real> Eq for Panel<T> {}
impl<T: Real> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .partial_cmp(&other.err)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

fn gk15<T, F>(f: &F, a: T, b: T, mode: Mode) -> Result<Panel<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    let c = (a + b) * T::lit(0.5);
    let h = (b - a) * T::lit(0.5);
    let fc = project(f(c), mode, c)?;
    let mut kron = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    let mut asc = fc.norm() * T::lit(WGK[7]);
    let mut samples = [Complex::new(T::zero(), T::zero()); 15];
    samples[7] = fc;
    for j in 0..7 {
        let dx = h * T::lit(XGK[j]);
        let f1 = project(f(c - dx), mode, c - dx)?;
        let f2 = project(f(c + dx), mode, c + dx)?;
        samples[j] = f1;
        samples[14 - j] = f2;
        let w = T::lit(WGK[j]);
        kron = kron + (f1 + f2) * w;
        asc = asc + (f1.norm() + f2.norm()) * w;
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * T::lit(WG[j / 2]);
        }
    }
    let mean = kron * T::lit(0.5);
    let mut resasc = (fc - mean).norm() * T::lit(WGK[7]);
    for j in 0..7 {
        resasc = resasc + ((samples[j] - mean).norm() + (samples[14 - j] - mean).norm()) * T::lit(WGK[j]);
    }
    let hab = h.abs();
    let mut err = (kron - gauss).norm() * hab;
    let resasc = resasc * hab;
    if resasc > T::zero() && err > T::zero() {
        err = resasc * T::one().min((T::lit(200.0) * err / resasc).powf(T::lit(1.5)));
    }
    let roundoff = T::lit(50.0) * T::epsilon() * asc * hab;
    if roundoff > err {
        err = roundoff;
    }
    Ok(Panel { a, b, value: kron * h, err })
}

/// Adaptive GK15 over the union of consecutive intervals given by `breaks`
/// (sorted), each initially split into panels no wider than `panel_cap`.
pub fn integrate_breaks<T, F>(f: &F, breaks: &[T], settings: &IntegrationSettings) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    settings.validate()?;
    let cap = T::lit(settings.panel_cap);
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    for w in breaks.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if !(hi > lo) {
            continue;
        }
        let n = ((hi - lo) / cap).ceil().to_usize().unwrap_or(1).max(1);
        let step = (hi - lo) / T::lit(n as f64);
        for k in 0..n {
            let a = lo + step * T::lit(k as f64);
            let b = if k + 1 == n { hi } else { lo + step * T::lit((k + 1) as f64) };
            heap.push(gk15(f, a, b, settings.mode)?);
            evaluations += 15;
        }
    }
    let mut subdivisions = 0usize;
    let converged = loop {
        let total: Complex<T> = heap.iter().fold(Complex::new(T::zero(), T::zero()), |acc, p| acc + p.value);
        let err: T = heap.iter().fold(T::zero(), |acc, p| acc + p.err);
        if err <= settings.tolerance(total) {
            break true;
        }
        if subdivisions >= settings.max_subdivisions {
            break false;
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break true,
        };
        let mid = (worst.a + worst.b) * T::lit(0.5);
        if !(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < T::epsilon() * T::lit(64.0) * worst.a.abs().max(T::one()) {
            // cannot refine further
            heap.push(Panel { err: T::zero(), ..worst });
            let rest: T = heap.iter().fold(T::zero(), |acc, p| acc + p.err);
            if rest <= settings.tolerance(total) {
                break true;
            }
            subdivisions += 1;
            continue;
        }
        heap.push(gk15(f, worst.a, mid, settings.mode)?);
        heap.push(gk15(f, mid, worst.b, settings.mode)?);
        evaluations += 30;
        subdivisions += 1;
    };
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal));
    let mut value = Complex::new(T::zero(), T::zero());
    let mut error_estimate = T::zero();
    for p in &panels {
        value = value + p.value;
        error_estimate = error_estimate + p.err;
    }
    Ok(IntegrationResult { value, error_estimate, evaluations, converged })
}

/// Truncation point V with exp(−rate·V) < eps.
pub fn truncation_point(decay_rate: f64, tail_cutoff_eps: f64) -> f64 {
    (1.0 / tail_cutoff_eps).ln() / decay_rate
}

fn tail_bound<T, F>(f: &F, v: T, decay: T, mode: Mode) -> T
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    match project(f(v), mode, v) {
        Ok(z) => z.norm() / decay,
        Err(_) => T::zero(),
    }
}

fn merge_breaks<T: Real>(lo: T, hi: T, extra: &[T]) -> Vec<T> {
    let mut b = vec![lo, hi];
    b.extend(extra.iter().copied().filter(|&x| x > lo && x < hi));
    b.sort_by(|p, q| p.partial_cmp(q).unwrap_or(Ordering::Equal));
    b.dedup();
    b
}

/// ∫_{−∞}^{∞} f, truncated where exp(−decay_rate·|v|) drops below the cutoff.
pub fn integrate_real_line<T, F>(f: &F, decay_rate: f64, settings: &IntegrationSettings) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    integrate_real_line_with_breaks(f, decay_rate, &[], settings)
}

/// As [`integrate_real_line`], forcing panel boundaries at `breaks`
/// (typically points where only one component of f is finite).
pub fn integrate_real_line_with_breaks<T, F>(
    f: &F,
    decay_rate: f64,
    breaks: &[T],
    settings: &IntegrationSettings,
) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    if !(decay_rate > 0.0) {
        return Err(Error::Domain("decay rate must be positive".into()));
    }
    let v = T::lit(truncation_point(decay_rate, settings.tail_cutoff_eps));
    let mut extra = vec![T::zero()];
    extra.extend_from_slice(breaks);
    let mut r = integrate_breaks(f, &merge_breaks(-v, v, &extra), settings)?;
    let d = T::lit(decay_rate);
    r.error_estimate = r.error_estimate + tail_bound(f, v, d, settings.mode) + tail_bound(f, -v, d, settings.mode);
    Ok(r)
}

/// ∫_0^∞ f with the same truncation rule.
pub fn integrate_half_line<T, F>(f: &F, decay_rate: f64, settings: &IntegrationSettings) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    integrate_half_line_with_breaks(f, decay_rate, &[], settings)
}

pub fn integrate_half_line_with_breaks<T, F>(
    f: &F,
    decay_rate: f64,
    breaks: &[T],
    settings: &IntegrationSettings,
) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    if !(decay_rate > 0.0) {
        return Err(Error::Domain("decay rate must be positive".into()));
    }
    let v = T::lit(truncation_point(decay_rate, settings.tail_cutoff_eps));
    let mut r = integrate_breaks(f, &merge_breaks(T::zero(), v, breaks), settings)?;
    r.error_estimate = r.error_estimate + tail_bound(f, v, T::lit(decay_rate), settings.mode);
    Ok(r)
}

/// ∫_{x0}^∞ f for integrands decaying like v^{−p}, p > 1, via v = x0·e^u.
pub fn integrate_algebraic_tail<T, F>(f: &F, x0: T, p: f64, settings: &IntegrationSettings) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    if !(p > 1.0) || !(x0 > T::zero()) {
        return Err(Error::Domain("algebraic tail needs p > 1 and x0 > 0".into()));
    }
    let g = |u: T| {
        let v = x0 * u.exp();
        f(v) * v
    };
    let umax = T::lit(truncation_point(p - 1.0, settings.tail_cutoff_eps));
    integrate_breaks(&g, &[T::zero(), umax], settings)
}

/// ∫_lo^hi f with optional endpoint singularity handling.
///
/// The integrand receives `(v, v − lo, hi − v)`; the two distances are
/// computed from the substitution variable, so they stay accurate where
/// `hi − v` would cancel to zero in floating point.
pub fn integrate_finite<T, F>(
    f: &F,
    lo: T,
    hi: T,
    endpoint: EndpointSingularity,
    settings: &IntegrationSettings,
) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T, T, T) -> Complex<T> + ?Sized,
{
    if !(hi > lo) {
        return Err(Error::Domain("integrate_finite needs lo < hi".into()));
    }
    let mid = (lo + hi) * T::lit(0.5);
    let half = (hi - lo) * T::lit(0.5);
    let two = T::lit(2.0);
    match endpoint {
        EndpointSingularity::None => {
            let g = |v: T| f(v, v - lo, hi - v);
            integrate_breaks(&g, &[lo, mid, hi], settings)
        }
        EndpointSingularity::InverseSqrtBoth => {
            // v = mid − half·cos θ
            let g = |th: T| {
                let (s, c) = ((th * T::lit(0.5)).sin(), (th * T::lit(0.5)).cos());
                let dlo = two * half * s * s;
                let dhi = two * half * c * c;
                f(mid - half * th.cos(), dlo, dhi) * (half * th.sin())
            };
            integrate_breaks(&g, &[T::zero(), T::PI() * T::lit(0.5), T::PI()], settings)
        }
        EndpointSingularity::InversePower(alpha) => {
            if !(alpha < 1.0) {
                return Err(Error::Domain(format!("endpoint exponent {alpha} is not integrable")));
            }
            // v = mid + half·tanh u, dv = half·sech²u du
            let g = |u: T| {
                let e = (-two * u.abs()).exp();
                let near = two * half * e / (T::one() + e);
                let far = two * half / (T::one() + e);
                let (dlo, dhi) = if u >= T::zero() { (far, near) } else { (near, far) };
                let v = if u >= T::zero() { hi - near } else { lo + near };
                // sech²u = 4e/(1+e)²
                let sech2 = T::lit(4.0) * e / ((T::one() + e) * (T::one() + e));
                let y = f(v, dlo, dhi) * (half * sech2);
                if !(y.re.is_finite() && y.im.is_finite()) && e < T::lit(1e-280) {
                    // the endpoint distance underflowed; for α < 1 the product has vanished
                    return Complex::new(T::zero(), T::zero());
                }
                y
            };
            let rate = (2.0 - 2.0 * alpha.max(0.0)).max(1e-3);
            let mut s2 = settings.clone();
            s2.panel_cap = settings.panel_cap.max(1.0);
            integrate_real_line(&g, rate, &s2)
        }
    }
}

/// Integrate only the real part of `f` over the line (or half line).
pub fn real_part_integral<T, F>(f: &F, decay_rate: f64, half_line: bool, breaks: &[T], settings: &IntegrationSettings) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    let s = settings.clone().with_mode(Mode::RealPartOnly);
    if half_line {
        integrate_half_line_with_breaks(f, decay_rate, breaks, &s)
    } else {
        integrate_real_line_with_breaks(f, decay_rate, breaks, &s)
    }
}

/// Removes simple real-axis poles t_k with residues c_k by subtracting
/// c_k·exp(−(v−t_k)²)/(v−t_k), whose principal value integral is zero.
pub fn principal_value_subtracted<'a, T, F>(f: &'a F, poles: &'a [(T, Complex<T>)]) -> impl Fn(T) -> Complex<T> + 'a
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    move |v: T| {
        let mut acc = f(v);
        for &(t, c) in poles {
            let d = v - t;
            acc = acc - c * ((-d * d).exp() / d);
        }
        acc
    }
}

/// Damped integral ∫ f(v)·exp(−σ²v²) dv extrapolated to σ → 0 with
/// Neville's scheme in σ. Used for conditionally convergent integrands.
pub fn integrate_damped<T, F>(f: &F, sigmas: &[f64], half_line: bool, breaks: &[T], settings: &IntegrationSettings) -> Result<IntegrationResult<T>>
where
    T: Real,
    F: Fn(T) -> Complex<T> + ?Sized,
{
    if sigmas.len() < 2 {
        return Err(Error::Domain("need at least two damping widths".into()));
    }
    let mut values = Vec::with_capacity(sigmas.len());
    let mut result = IntegrationResult::<T>::zero();
    for &sig in sigmas {
        let s2 = T::lit(sig * sig);
        let g = |v: T| f(v) * (-(s2 * v * v)).exp();
        // exp(−σ²V²) < eps with V on the Gaussian scale
        let vmax = (settings.tail_cutoff_eps.recip().ln()).sqrt() / sig;
        let lo = if half_line { T::zero() } else { T::lit(-vmax) };
        let mut bs = vec![lo, T::zero(), T::lit(vmax)];
        bs.extend(breaks.iter().copied());
        let bs = merge_breaks(lo, T::lit(vmax), &bs);
        let r = integrate_breaks(&g, &bs, settings)?;
        values.push(r.value);
        result.evaluations += r.evaluations;
        result.converged &= r.converged;
        result.error_estimate = result.error_estimate.max(r.error_estimate);
    }
    let xs: Vec<T> = sigmas.iter().map(|&s| T::lit(s)).collect();
    let (v, spread) = neville_at_zero(&xs, &values);
    result.value = v;
    result.error_estimate = result.error_estimate + spread;
    Ok(result)
}

/// Polynomial extrapolation to x = 0; returns the value and the change
/// contributed by the last point (a crude error estimate).
pub fn neville_at_zero<T: Real>(xs: &[T], ys: &[Complex<T>]) -> (Complex<T>, T) {
    let n = xs.len();
    let mut p = ys.to_vec();
    let mut last_change = T::zero();
    for m in 1..n {
        for i in 0..n - m {
            let (xi, xj) = (xs[i], xs[i + m]);
            let next = (p[i + 1] * xi - p[i] * xj) / (xi - xj);
            if i == 0 {
                last_change = (next - p[0]).norm();
            }
            p[i] = next;
        }
    }
    (p[0], last_change)
}
