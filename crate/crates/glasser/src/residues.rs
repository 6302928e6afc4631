//! Pole bookkeeping for the strip between Im v = 0 and Im v = −b, numeric
//! residues by contour averaging, and the closed-form residues of the
//! ζ-power kernel (a+iv, a+b−iv).

use std::f64::consts::PI;

use num_complex::Complex;

use crate::specfun::{riemann_zeta, SpecialFunctionContext};
use crate::{Error, Result, C64};

/// Distance from a strip edge below which a pole counts as "on" it.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Poles closer than this are treated as one pole.
pub const MERGE_TOL: f64 = 1e-9;

fn ci(y: f64) -> C64 {
    Complex::new(0.0, y)
}

/// The open strip −|b| < Im v < 0 (b > 0) or 0 < Im v < |b| (b < 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripSpec {
    pub b: f64,
}

impl StripSpec {
    pub fn new(b: f64) -> Result<Self> {
        if !b.is_finite() || b == 0.0 {
            return Err(Error::Domain(format!("strip parameter b must be finite and nonzero, got {b}")));
        }
        Ok(Self { b })
    }

    /// sgn(b): the orientation of the closed contour.
    pub fn orientation(&self) -> f64 {
        self.b.signum()
    }

    fn edges(&self) -> (f64, f64) {
        if self.b > 0.0 {
            (-self.b, 0.0)
        } else {
            (0.0, -self.b)
        }
    }

    /// 1 inside, 1/2 on an edge, 0 outside.
    pub fn weight(&self, v: C64) -> f64 {
        let (lo, hi) = self.edges();
        let y = v.im;
        if (y - lo).abs() <= BOUNDARY_TOL || (y - hi).abs() <= BOUNDARY_TOL {
            0.5
        } else if y > lo && y < hi {
            1.0
        } else {
            0.0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleSpec {
    pub location: C64,
    /// Upper bound on the order; only informational for numeric residues.
    pub order: u32,
    pub boundary_weight: f64,
    pub analytic_residue: Option<C64>,
}

impl PoleSpec {
    pub fn new(location: C64, order: u32, strip: &StripSpec) -> Self {
        Self { location, order, boundary_weight: strip.weight(location), analytic_residue: None }
    }

    pub fn with_residue(mut self, r: C64) -> Self {
        self.analytic_residue = Some(r);
        self
    }
}

/// Classifies candidate singular points against the strip. Points outside
/// keep weight 0: they are not summed but still limit contour radii.
pub fn classify(strip: &StripSpec, candidates: &[(C64, u32)]) -> Vec<PoleSpec> {
    let mut out: Vec<PoleSpec> = Vec::new();
    for &(p, order) in candidates {
        if let Some(q) = out.iter_mut().find(|q| (q.location - p).norm() < MERGE_TOL) {
            q.order += order;
            continue;
        }
        out.push(PoleSpec::new(p, order, strip));
    }
    out
}

/// Largest safe circle radius around `v0`: half the distance to the
/// nearest other singular point, capped at 1/4.
pub fn contour_radius(v0: C64, others: &[C64]) -> f64 {
    let mut r = 0.25f64;
    for &q in others {
        let d = (q - v0).norm();
        if d > MERGE_TOL {
            r = r.min(0.5 * d);
        }
    }
    r
}

/// (1/2πi)∮ f over |v − v0| = radius by the trapezoid rule, doubling the
/// sample count until successive estimates agree to 1e−12 (relative).
pub fn numeric_residue<F>(f: &F, v0: C64, radius: f64, samples: usize) -> Result<C64>
where
    F: Fn(C64) -> C64 + ?Sized,
{
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::Domain(format!("contour radius must be positive, got {radius}")));
    }
    let eval = |n: usize, offset: usize, step: usize| -> Result<C64> {
        // mean of f(v0+w)·w over the points k = offset, offset+step, ...
        let mut acc = C64::new(0.0, 0.0);
        let mut k = offset;
        while k < n {
            let w = C64::from_polar(radius, 2.0 * PI * k as f64 / n as f64);
            let y = f(v0 + w) * w;
            if !y.re.is_finite() || !y.im.is_finite() {
                return Err(Error::UnresolvedResidue(format!("non-finite sample on the circle around {v0}")));
            }
            acc += y;
            k += step;
        }
        Ok(acc)
    };
    let mut n = samples.max(16);
    let mut sum = eval(n, 0, 1)?;
    let mut est = sum / n as f64;
    while n < 1 << 16 {
        // reuse the old nodes: only the odd nodes of the doubled grid are new
        let fresh = eval(2 * n, 1, 2)?;
        sum += fresh;
        n *= 2;
        let next = sum / n as f64;
        let tol = 1e-12 * next.norm().max(radius.powi(2).min(1.0) * 1e-2).max(1e-300);
        if (next - est).norm() <= tol.max(1e-15) {
            return Ok(next);
        }
        est = next;
    }
    Err(Error::UnresolvedResidue(format!("residue at {v0} did not settle with {n} samples")))
}

/// Σ w_j Res F over the listed poles, using analytic residues where
/// available. Weight-0 entries only shape the contour radii.
pub fn weighted_residue_sum<F>(f: &F, poles: &[PoleSpec], extra_singularities: &[C64]) -> Result<C64>
where
    F: Fn(C64) -> C64 + ?Sized,
{
    Ok(residue_table(f, poles, extra_singularities)?
        .iter()
        .fold(C64::new(0.0, 0.0), |acc, (p, r)| acc + r * p.boundary_weight))
}

/// The weighted poles (coincident candidates merged) with their residues.
pub fn residue_table<F>(f: &F, poles: &[PoleSpec], extra_singularities: &[C64]) -> Result<Vec<(PoleSpec, C64)>>
where
    F: Fn(C64) -> C64 + ?Sized,
{
    let mut sing: Vec<C64> = poles.iter().map(|p| p.location).collect();
    sing.extend_from_slice(extra_singularities);
    let mut merged: Vec<PoleSpec> = Vec::new();
    for p in poles {
        if let Some(q) = merged.iter_mut().find(|q| (q.location - p.location).norm() < MERGE_TOL) {
            q.boundary_weight = q.boundary_weight.max(p.boundary_weight);
            q.analytic_residue = None;
            continue;
        }
        merged.push(*p);
    }
    let mut out = Vec::new();
    for p in merged.into_iter().filter(|p| p.boundary_weight > 0.0) {
        let r = match p.analytic_residue {
            Some(r) => r,
            None => numeric_residue(f, p.location, contour_radius(p.location, &sing), 64)?,
        };
        out.push((p, r));
    }
    Ok(out)
}

/// Indicator of the poles i(a−1) and i(1−a−b) lying in the strip:
/// 1 strictly inside, 1/2 on an edge, 0 outside.
pub fn indicator_h(a: f64, b: f64) -> Result<f64> {
    let strip = StripSpec::new(b)?;
    Ok(strip.weight(ci(a - 1.0)))
}

fn zeta_r(s: f64, ctx: &SpecialFunctionContext) -> Result<f64> {
    riemann_zeta(C64::new(s, 0.0), ctx).map(|z| z.re)
}

/// Closed-form residues of (ζ(a+iv)ⁿ + ζ(a+b−iv)ⁿ)/cosh(πv/b):
/// j = 1 at −ib/2, j = 2 at i(a−1) and j = 3 at i(1−a−b). n = 1..=4.
pub fn appendix_a_residue(n: u32, j: u32, a: f64, b: f64, ctx: &SpecialFunctionContext) -> Result<C64> {
    if !(1..=4).contains(&n) {
        return Err(Error::Domain(format!("closed-form residues cover n = 1..4, got {n}")));
    }
    if b == 0.0 || !b.is_finite() || !a.is_finite() {
        return Err(Error::Domain("a, b must be finite with b ≠ 0".into()));
    }
    let i = ci(1.0);
    if j == 1 {
        let z = zeta_r(a + b / 2.0, ctx)?;
        return Ok(i * (2.0 * b / PI) * z.powi(n as i32));
    }
    if j != 2 && j != 3 {
        return Err(Error::Domain(format!("residue index must be 1, 2 or 3, got {j}")));
    }
    let aa = PI * (a - 1.0) / b;
    let (sa, c) = aa.sin_cos();
    if c.abs() < 1e-12 {
        return Err(Error::Domain("cos(π(a−1)/b) = 0: the pole collides with a sech pole".into()));
    }
    let g = crate::specfun::stieltjes_constant(0, ctx)?;
    let g1 = crate::specfun::stieltjes_constant(1, ctx)?;
    let g2 = crate::specfun::stieltjes_constant(2, ctx)?;
    let (p, p2, p3) = (PI, PI * PI, PI * PI * PI);
    let (b2, b3) = (b * b, b * b * b);
    let r = match n {
        1 => -1.0 / c,
        2 => -2.0 * g / c + p * sa / (b * c * c),
        3 => {
            (3.0 * g1 - 3.0 * g * g + p2 / (2.0 * b2)) / c + 3.0 * sa * p * g / (b * c * c)
                - p2 / (b2 * c.powi(3))
        }
        _ => {
            (12.0 * g1 * g - 2.0 * g2 - 4.0 * g.powi(3) + 2.0 * g * p2 / b2) / c
                - p * sa * (-36.0 * g * g * b2 + 24.0 * g1 * b2 + p2) / (6.0 * b3 * c * c)
                - 4.0 * p2 * g / (b2 * c.powi(3))
                + p3 * sa / (b3 * c.powi(4))
        }
    };
    Ok(i * r)
}

/// Candidate singular points of (ζ(a+iv)ⁿ + ζ(a+b−iv)ⁿ)/cosh(πv/b) near the
/// strip: P1 = i(a−1), P2 = i(1−a−b), P3 = −ib/2, plus the neighbouring sech
/// poles that bound the residue circles.
pub fn poles_ex6(a: f64, b: f64, n: u32) -> Result<Vec<PoleSpec>> {
    let strip = StripSpec::new(b)?;
    let mut c = vec![(ci(-b / 2.0), 1), (ci(a - 1.0), n), (ci(1.0 - a - b), n)];
    c.extend(sech_poles(1.0 / b, 0.0, &strip));
    Ok(classify(&strip, &c))
}

/// Poles of the product kernel ζ(a+iv)ζ(a+b−iv)/cosh(πv/b) with their
/// closed-form residues.
pub fn poles_product_kernel(a: f64, b: f64, ctx: &SpecialFunctionContext) -> Result<Vec<PoleSpec>> {
    let strip = StripSpec::new(b)?;
    let mut out = Vec::new();
    let z3 = zeta_r(a + b / 2.0, ctx)?;
    out.push(PoleSpec::new(ci(-b / 2.0), 1, &strip).with_residue(ci(b / PI) * z3 * z3));
    let aa = PI * (a - 1.0) / b;
    for p in [ci(a - 1.0), ci(1.0 - a - b)] {
        let mut spec = PoleSpec::new(p, 1, &strip);
        if aa.cos().abs() > 1e-12 && (p - ci(-b / 2.0)).norm() > MERGE_TOL && (ci(a - 1.0) - ci(1.0 - a - b)).norm() > MERGE_TOL {
            let z = zeta_r(2.0 * a + b - 1.0, ctx)?;
            spec = spec.with_residue(ci(-z / aa.cos()));
        }
        out.push(spec);
    }
    Ok(out)
}

/// Poles of ζ(a+iv)ζ(a+b−iv)(sech(πbv) − sech(πb(v+ib))): P1 = i(a−1),
/// P2 = i(1−a−b), P3 = −i/(2b), P4 = i(1−2b²)/(2b), plus nearby sech poles.
pub fn poles_fgen_kernel(a: f64, b: f64, n: u32) -> Result<Vec<PoleSpec>> {
    let strip = StripSpec::new(b)?;
    let mut c = vec![
        (ci(a - 1.0), n),
        (ci(1.0 - a - b), n),
        (ci(-1.0 / (2.0 * b)), 1),
        (ci((1.0 - 2.0 * b * b) / (2.0 * b)), 1),
    ];
    c.extend(sech_poles(b, 0.0, &strip));
    c.extend(sech_poles(b, b, &strip));
    Ok(classify(&strip, &c))
}

/// Singular points of ζ(a+iv)^r ζ(a+b−iv)^r /((b−iv)^p (a+b−iv)^q):
/// P1 = i(a−1), P2 = i(1−a−b) (ζ poles, r > 0), P3 = −ib (p > 0),
/// P4 = −i(a+b) (q > 0); for r < 0 the trivial zeros of both ζ factors
/// close to the strip. Returned weights follow the strip geometry.
pub fn poles_multiplicative(a: f64, b: f64, p: i32, q: i32, r: i32) -> Result<Vec<PoleSpec>> {
    let strip = StripSpec::new(b)?;
    let mut c = Vec::new();
    if r > 0 {
        c.push((ci(a - 1.0), r as u32));
        c.push((ci(1.0 - a - b), r as u32));
    } else if r < 0 {
        // ζ(a+iv) = 0 at a+iv = −2k, ζ(a+b−iv) = 0 at a+b−iv = −2k
        let span = b.abs() + 2.0;
        for k in 1..=64 {
            let z1 = ci(a + 2.0 * k as f64);
            let z2 = ci(-(a + b + 2.0 * k as f64));
            for z in [z1, z2] {
                if z.im.abs() <= span + b.abs() {
                    c.push((z, (-r) as u32));
                }
            }
        }
    }
    if p > 0 {
        c.push((ci(-b), p as u32));
    }
    if q > 0 {
        c.push((ci(-(a + b)), q as u32));
    }
    Ok(classify(&strip, &c))
}

/// Poles of cos^s(π(b/2−iv))/cosh(πv/b) (`sine = false`) or of
/// sin^s(π(b/2−iv))/cosh(πv/b) (`sine = true`) for s ≤ 0 near the strip.
pub fn poles_trig(b: f64, s: f64, sine: bool) -> Result<Vec<PoleSpec>> {
    let strip = StripSpec::new(b)?;
    let mut c = sech_poles(1.0 / b, 0.0, &strip);
    if s < 0.0 {
        let order = (-s).ceil() as u32;
        let m = b.abs().ceil() as i64 + 2;
        for k in -m..=m {
            // zero of the trig factor: b/2 − iv = k (+1/2 for cos)
            let shift = if sine { 0.0 } else { 0.5 };
            c.push((ci(k as f64 + shift - b / 2.0), order));
        }
    }
    Ok(classify(&strip, &c))
}

/// Poles of cosh(π·scale·(v + i·shift)) near the strip, as classified
/// candidates: v = −i(shift + (k+1/2)/scale).
pub fn sech_poles(scale: f64, shift: f64, strip: &StripSpec) -> Vec<(C64, u32)> {
    let reach = 2.0 * strip.b.abs() + 1.0;
    let step = 1.0 / scale.abs();
    let mut out = Vec::new();
    let kmax = (reach / step).ceil() as i64 + 1;
    for k in -kmax..=kmax {
        let y = -(shift + (k as f64 + 0.5) * step);
        if y.abs() <= reach {
            out.push((ci(y), 1));
        }
    }
    out
}
