//! The master theorem and its two h-variants: criterion checks, residue-sum
//! assembly and the three-way verification of a bound identity.

use std::f64::consts::PI;
use std::sync::Arc;
use std::time::Instant;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quadrature::{self, EndpointSingularity, IntegrationSettings, Mode};
use crate::residues::{residue_table, weighted_residue_sum, PoleSpec, StripSpec};
use crate::{Error, Integral, Result, C64};

/// Complex kernel F(v) evaluated off the real axis.
pub type Kernel = Arc<dyn Fn(C64) -> C64 + Send + Sync>;
/// Real-line integrand.
pub type LineFn = Arc<dyn Fn(f64) -> C64 + Send + Sync>;
/// Finite-interval integrand receiving (v, v − lo, hi − v).
pub type FiniteFn = Arc<dyn Fn(f64, f64, f64) -> C64 + Send + Sync>;

#[derive(Clone)]
pub enum CriterionKind {
    /// F(v) + F(−ib−v) = 0
    Antisymmetric,
    /// F(v) − F(−ib−v) = h(v)F(v)
    DifferenceH(Kernel),
    /// F(v) + F(−ib−v) = h(v)F(v)
    AdditiveH(Kernel),
}

impl CriterionKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Antisymmetric => "antisymmetric",
            Self::DifferenceH(_) => "difference_h",
            Self::AdditiveH(_) => "additive_h",
        }
    }

    /// −πi for the theorem, −2πi for both h-variants.
    pub fn factor(&self) -> C64 {
        match self {
            Self::Antisymmetric => Complex::new(0.0, -PI),
            _ => Complex::new(0.0, -2.0 * PI),
        }
    }
}

impl std::fmt::Debug for CriterionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Max normalized violation of the declared criterion over `sample_count`
/// seeded real points in [−10, 10], kept 1e−3 away from `avoid`.
pub fn check_criterion(
    f: &(dyn Fn(C64) -> C64 + Send + Sync),
    strip: &StripSpec,
    criterion: &CriterionKind,
    sample_count: usize,
    seed: u64,
    avoid: &[f64],
) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut taken = 0;
    let mut tries = 0;
    while taken < sample_count {
        tries += 1;
        if tries > 100 * sample_count.max(1) {
            return Err(Error::SingularSample("could not place criterion samples".into()));
        }
        let x: f64 = rng.gen_range(-10.0..10.0);
        if avoid.iter().any(|&t| (x - t).abs() < 1e-3) {
            continue;
        }
        taken += 1;
        let v = Complex::new(x, 0.0);
        let mirror = Complex::new(-x, -strip.b);
        let fv = f(v);
        let fm = f(mirror);
        let dev = match criterion {
            CriterionKind::Antisymmetric => fv + fm,
            CriterionKind::DifferenceH(h) => fv - fm - h(v) * fv,
            CriterionKind::AdditiveH(h) => fv + fm - h(v) * fv,
        };
        if !(dev.re.is_finite() && dev.im.is_finite()) {
            return Err(Error::SingularSample(format!("criterion sample at v = {x}")));
        }
        worst = worst.max(dev.norm() / fv.norm().max(1.0));
    }
    Ok(worst)
}

/// sgn(b)·factor·Σ w_j R_j for residues that are already known.
pub fn rhs_from_residues(poles: &[PoleSpec], criterion: &CriterionKind, orientation_sign: f64) -> Result<C64> {
    let mut total = C64::new(0.0, 0.0);
    for p in poles.iter().filter(|p| p.boundary_weight > 0.0) {
        let r = p
            .analytic_residue
            .ok_or_else(|| Error::UnresolvedResidue(format!("no residue value for pole at {}", p.location)))?;
        total += r * p.boundary_weight;
    }
    Ok(criterion.factor() * orientation_sign * total)
}

/// One application of the theorem (or an h-variant) to a kernel.
#[derive(Clone)]
pub struct MasterSum {
    pub kernel: Kernel,
    pub strip: StripSpec,
    pub criterion: CriterionKind,
    pub poles: Vec<PoleSpec>,
    /// Real points to keep criterion samples away from.
    pub avoid: Vec<f64>,
}

impl MasterSum {
    pub fn new(kernel: Kernel, b: f64, criterion: CriterionKind, poles: Vec<PoleSpec>) -> Result<Self> {
        Ok(Self { kernel, strip: StripSpec::new(b)?, criterion, poles, avoid: Vec::new() })
    }

    pub fn avoiding(mut self, pts: &[f64]) -> Self {
        self.avoid.extend_from_slice(pts);
        self
    }

    pub fn evaluate(&self) -> Result<C64> {
        let f = |v: C64| (self.kernel)(v);
        let s = weighted_residue_sum(&f, &self.poles, &[])?;
        Ok(self.criterion.factor() * self.strip.orientation() * s)
    }

    /// Poles that contribute, with their residues and weights.
    pub fn residues(&self) -> Result<Vec<(PoleSpec, C64)>> {
        let f = |v: C64| (self.kernel)(v);
        residue_table(&f, &self.poles, &[])
    }
}

/// How the theorem's prediction for an entry is assembled.
#[derive(Clone)]
pub enum ResidueRoute {
    Master(MasterSum),
    /// Σ c_k · route_k
    Linear(Vec<(C64, ResidueRoute)>),
    /// c·route + offset
    Affine(C64, Box<ResidueRoute>, C64),
    /// A value obtained without quadrature (e.g. a Dirichlet series).
    Constant(C64),
}

impl ResidueRoute {
    pub fn scaled(self, c: f64) -> Self {
        Self::Affine(Complex::new(c, 0.0), Box::new(self), C64::new(0.0, 0.0))
    }

    pub fn shifted(self, c: C64) -> Self {
        Self::Affine(Complex::new(1.0, 0.0), Box::new(self), c)
    }

    pub fn evaluate(&self) -> Result<C64> {
        match self {
            Self::Master(m) => m.evaluate(),
            Self::Linear(terms) => terms.iter().try_fold(C64::new(0.0, 0.0), |acc, (c, r)| Ok(acc + c * r.evaluate()?)),
            Self::Affine(c, r, d) => Ok(c * r.evaluate()? + d),
            Self::Constant(c) => Ok(*c),
        }
    }

    /// Every master application inside the route.
    pub fn masters(&self) -> Vec<&MasterSum> {
        match self {
            Self::Master(m) => vec![m],
            Self::Linear(terms) => terms.iter().flat_map(|(_, r)| r.masters()).collect(),
            Self::Affine(_, r, _) => r.masters(),
            Self::Constant(_) => Vec::new(),
        }
    }
}

/// Integration domain and technique for the stated left-hand side.
#[derive(Clone)]
pub enum Domain {
    /// (−∞, ∞), integrand decays like exp(−rate·|v|).
    Line { decay: f64 },
    /// (0, ∞)
    HalfLine { decay: f64 },
    /// ∫ f·exp(−σ²v²) extrapolated to σ → 0.
    Damped { sigmas: Vec<f64>, half_line: bool },
    /// [0, cut] by GK, then [cut, reach] with the log substitution for
    /// integrands decaying like v^{−power}; the part beyond `reach` is
    /// below reach^{1−power} and dropped.
    Algebraic { cut: f64, power: f64, reach: f64, half_line: bool },
    /// (lo, hi) with an endpoint rule; uses `Lhs::finite`.
    Finite { lo: f64, hi: f64, endpoint: EndpointSingularity },
}

#[derive(Clone)]
pub struct Lhs {
    pub integrand: LineFn,
    pub finite: Option<FiniteFn>,
    pub domain: Domain,
    pub mode: Mode,
    pub breaks: Vec<f64>,
    /// Simple real poles (t, residue) removed by subtraction (principal value).
    pub pv: Vec<(f64, C64)>,
    pub scale: C64,
    pub offset: C64,
}

impl Lhs {
    pub fn new(integrand: LineFn, domain: Domain) -> Self {
        Self {
            integrand,
            finite: None,
            domain,
            mode: Mode::FullValue,
            breaks: Vec::new(),
            pv: Vec::new(),
            scale: C64::new(1.0, 0.0),
            offset: C64::new(0.0, 0.0),
        }
    }

    pub fn finite(f: FiniteFn, lo: f64, hi: f64, endpoint: EndpointSingularity) -> Self {
        let g = f.clone();
        let mut l = Self::new(Arc::new(move |v| g(v, v - lo, hi - v)), Domain::Finite { lo, hi, endpoint });
        l.finite = Some(f);
        l
    }

    pub fn real_part(mut self) -> Self {
        self.mode = Mode::RealPartOnly;
        self
    }

    pub fn imag_part(mut self) -> Self {
        self.mode = Mode::ImaginaryPartOnly;
        self
    }

    pub fn with_breaks(mut self, b: &[f64]) -> Self {
        self.breaks.extend_from_slice(b);
        self
    }

    pub fn with_pv(mut self, t: f64, c: C64) -> Self {
        self.pv.push((t, c));
        self.breaks.push(t);
        self
    }

    pub fn scaled(mut self, c: f64) -> Self {
        self.scale *= c;
        self.offset *= c;
        self
    }

    pub fn shifted(mut self, c: C64) -> Self {
        self.offset += c;
        self
    }

    pub fn integrate(&self, settings: &IntegrationSettings) -> Result<Integral> {
        let s = settings.clone().with_mode(self.mode);
        let base = |v: f64| (self.integrand)(v);
        let pv = quadrature::principal_value_subtracted(&base, &self.pv);
        let f: &dyn Fn(f64) -> C64 = if self.pv.is_empty() { &base } else { &pv };
        let r = match &self.domain {
            Domain::Line { decay } => quadrature::integrate_real_line_with_breaks(f, *decay, &self.breaks, &s)?,
            Domain::HalfLine { decay } => quadrature::integrate_half_line_with_breaks(f, *decay, &self.breaks, &s)?,
            Domain::Damped { sigmas, half_line } => quadrature::integrate_damped(f, sigmas, *half_line, &self.breaks, &s)?,
            Domain::Algebraic { cut, power, reach, half_line } => {
                let mut s = s.clone();
                s.tail_cutoff_eps = s.tail_cutoff_eps.max((cut / reach).powf(power - 1.0));
                let lo = if *half_line { 0.0 } else { -cut };
                let mut bs = vec![lo, 0.0, *cut];
                bs.extend(self.breaks.iter().copied().filter(|&x| x > lo && x < *cut));
                bs.sort_by(|a, b| a.total_cmp(b));
                bs.dedup();
                let mut body = quadrature::integrate_breaks(f, &bs, &s)?;
                body = body.combine(quadrature::integrate_algebraic_tail(f, *cut, *power, &s)?);
                if !half_line {
                    let g = |v: f64| f(-v);
                    body = body.combine(quadrature::integrate_algebraic_tail(&g, *cut, *power, &s)?);
                }
                body
            }
            Domain::Finite { lo, hi, endpoint } => {
                let g = self.finite.as_ref().ok_or_else(|| Error::Validation("finite domain without a finite integrand".into()))?;
                let proj = |v: f64, dl: f64, dh: f64| g(v, dl, dh);
                quadrature::integrate_finite(&proj, *lo, *hi, *endpoint, &s)?
            }
        };
        Ok(Integral {
            value: r.value * self.scale + self.offset,
            error_estimate: r.error_estimate * self.scale.norm(),
            ..r
        })
    }
}

/// An identity with all parameters bound.
#[derive(Clone)]
pub struct BoundIdentity {
    pub id: String,
    pub paper_eq: String,
    pub params: Vec<(String, f64)>,
    pub lhs: Lhs,
    pub closed_form: C64,
    pub route: ResidueRoute,
    /// Entry-specific tolerance override (approximation entries).
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationSettings {
    pub tolerance: f64,
    pub criterion_tolerance: f64,
    pub criterion_samples: usize,
    pub seed: u64,
    pub integration: IntegrationSettings,
}

impl Default for VerificationSettings {
    fn default() -> Self {
        Self {
            tolerance: 1e-6,
            criterion_tolerance: 1e-10,
            criterion_samples: 64,
            seed: 0x5eed,
            integration: IntegrationSettings::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub paper_eq: String,
    pub params: Vec<(String, f64)>,
    pub lhs: C64,
    pub lhs_error: f64,
    pub rhs_closed: C64,
    pub rhs_residues: C64,
    pub criterion_dev: f64,
    pub residual_closed: f64,
    pub residual_residues: f64,
    pub pass: bool,
    pub seconds: f64,
    pub error: Option<String>,
}

/// |x − y| / (1 + |y|)
pub fn residual(x: C64, y: C64) -> f64 {
    (x - y).norm() / (1.0 + y.norm())
}

fn nan() -> C64 {
    C64::new(f64::NAN, f64::NAN)
}

/// Quadrature, residue sum, closed form and criterion deviation for one
/// bound identity. Errors end up in the report, never abort.
pub fn verify(identity: &BoundIdentity, settings: &VerificationSettings) -> VerificationReport {
    let start = Instant::now();
    let mut errors = Vec::new();
    let lhs = identity.lhs.integrate(&settings.integration).unwrap_or_else(|e| {
        errors.push(format!("quadrature: {e}"));
        Integral { value: nan(), error_estimate: f64::NAN, evaluations: 0, converged: false }
    });
    if !lhs.converged && lhs.value.re.is_finite() {
        errors.push(format!("quadrature did not reach tolerance (estimate {:.3e})", lhs.error_estimate));
    }
    let rhs_residues = identity.route.evaluate().unwrap_or_else(|e| {
        errors.push(format!("residues: {e}"));
        nan()
    });
    let mut criterion_dev = 0.0f64;
    for m in identity.route.masters() {
        match check_criterion(&*m.kernel, &m.strip, &m.criterion, settings.criterion_samples, settings.seed, &m.avoid) {
            Ok(d) => criterion_dev = criterion_dev.max(d),
            Err(e) => {
                errors.push(format!("criterion: {e}"));
                criterion_dev = f64::NAN;
            }
        }
    }
    let tol = identity.tolerance.unwrap_or(settings.tolerance);
    let residual_closed = residual(lhs.value, identity.closed_form);
    let residual_residues = residual(lhs.value, rhs_residues);
    let pass = residual_closed <= tol
        && residual_residues <= tol
        && criterion_dev <= settings.criterion_tolerance
        && errors.is_empty();
    VerificationReport {
        id: identity.id.clone(),
        paper_eq: identity.paper_eq.clone(),
        params: identity.params.clone(),
        lhs: lhs.value,
        lhs_error: lhs.error_estimate,
        rhs_closed: identity.closed_form,
        rhs_residues,
        criterion_dev,
        residual_closed,
        residual_residues,
        pass,
        seconds: start.elapsed().as_secs_f64(),
        error: if errors.is_empty() { None } else { Some(errors.join("; ")) },
    }
}

/// A report for an entry that could not even be bound.
pub fn failed_report(id: &str, params: Vec<(String, f64)>, err: &Error) -> VerificationReport {
    VerificationReport {
        id: id.to_string(),
        paper_eq: id.to_string(),
        params,
        lhs: nan(),
        lhs_error: f64::NAN,
        rhs_closed: nan(),
        rhs_residues: nan(),
        criterion_dev: f64::NAN,
        residual_closed: f64::NAN,
        residual_residues: f64::NAN,
        pass: false,
        seconds: 0.0,
        error: Some(err.to_string()),
    }
}
