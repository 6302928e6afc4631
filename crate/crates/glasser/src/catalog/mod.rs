//! Registry of the verified identities. Each entry binds its parameters to
//! a stated left-hand side, a closed form and a residue route.

mod fns;
mod s3_complex;
mod s3_ex6;
mod s3_fourpole;
mod s3_specific;
mod s4_mult;
mod s4_pairing;
mod s5_trig;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::master::{self, BoundIdentity, Lhs, LineFn, ResidueRoute, VerificationReport, VerificationSettings};
use crate::{Error, Result, C64};

pub type Params = BTreeMap<String, f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    B1Specific,
    GeneralEx6,
    ProductKernel,
    FgenFourpole,
    Crit2Family,
    PairingConvergence,
    Hurwitz,
    MultiplicativeH,
    TrigCosine,
    TrigSine,
    TrigDifferentiated,
    Approximation,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::B1Specific,
        Family::GeneralEx6,
        Family::ProductKernel,
        Family::FgenFourpole,
        Family::Crit2Family,
        Family::PairingConvergence,
        Family::Hurwitz,
        Family::MultiplicativeH,
        Family::TrigCosine,
        Family::TrigSine,
        Family::TrigDifferentiated,
        Family::Approximation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::B1Specific => "b1_specific",
            Family::GeneralEx6 => "general_ex6",
            Family::ProductKernel => "product_kernel",
            Family::FgenFourpole => "fgen_fourpole",
            Family::Crit2Family => "crit2_family",
            Family::PairingConvergence => "pairing_convergence",
            Family::Hurwitz => "hurwitz",
            Family::MultiplicativeH => "multiplicative_h",
            Family::TrigCosine => "trig_cosine",
            Family::TrigSine => "trig_sine",
            Family::TrigDifferentiated => "trig_differentiated",
            Family::Approximation => "approximation",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == s)
    }
}

/// A parameter with its default and admissible interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Param {
    pub name: &'static str,
    pub default: f64,
    pub min: f64,
    pub max: f64,
    pub open_min: bool,
    pub open_max: bool,
}

impl Param {
    pub const fn open(name: &'static str, default: f64, min: f64, max: f64) -> Self {
        Self { name, default, min, max, open_min: true, open_max: true }
    }

    pub const fn closed(name: &'static str, default: f64, min: f64, max: f64) -> Self {
        Self { name, default, min, max, open_min: false, open_max: false }
    }

    pub fn contains(&self, x: f64) -> bool {
        let lo = if self.open_min { x > self.min } else { x >= self.min };
        let hi = if self.open_max { x < self.max } else { x <= self.max };
        x.is_finite() && lo && hi
    }
}

/// Everything an entry produces once its parameters are fixed.
#[derive(Clone)]
pub struct Parts {
    pub lhs: Lhs,
    pub closed: C64,
    pub route: ResidueRoute,
    pub tolerance: Option<f64>,
}

pub type Builder = fn(&Params) -> Result<Parts>;

#[derive(Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub section: &'static str,
    pub family: Family,
    pub params: Vec<Param>,
    pub closed_form_expr: &'static str,
    pub notes: &'static str,
    build: Builder,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("section", &self.section)
            .field("family", &self.family)
            .finish()
    }
}

impl CatalogEntry {
    pub(crate) fn new(id: &'static str, section: &'static str, family: Family, build: Builder) -> Self {
        Self { id, section, family, params: Vec::new(), closed_form_expr: "", notes: "", build }
    }

    pub(crate) fn param(mut self, p: Param) -> Self {
        self.params.push(p);
        self
    }

    pub(crate) fn expr(mut self, e: &'static str) -> Self {
        self.closed_form_expr = e;
        self
    }

    pub(crate) fn notes(mut self, n: &'static str) -> Self {
        self.notes = n;
        self
    }

    pub fn default_params(&self) -> Params {
        self.params.iter().map(|p| (p.name.to_string(), p.default)).collect()
    }

    /// Defaults overridden by `overrides`; rejects unknown names and values
    /// outside the declared intervals.
    pub fn resolve_params(&self, overrides: &Params) -> Result<Params> {
        let mut out = self.default_params();
        for (k, &v) in overrides {
            let p = self
                .params
                .iter()
                .find(|p| p.name == k)
                .ok_or_else(|| Error::Validation(format!("{} has no parameter '{k}'", self.id)))?;
            if !p.contains(v) {
                return Err(Error::Domain(format!(
                    "{}: {k} = {v} outside {}{}, {}{}",
                    self.id,
                    if p.open_min { "(" } else { "[" },
                    p.min,
                    p.max,
                    if p.open_max { ")" } else { "]" }
                )));
            }
            out.insert(k.clone(), v);
        }
        Ok(out)
    }

    pub fn parts(&self, overrides: &Params) -> Result<Parts> {
        let p = self.resolve_params(overrides)?;
        (self.build)(&p)
    }

    pub fn bind(&self, overrides: &Params) -> Result<BoundIdentity> {
        let p = self.resolve_params(overrides)?;
        let parts = (self.build)(&p)?;
        if !(parts.closed.re.is_finite() && parts.closed.im.is_finite()) {
            return Err(Error::Domain(format!("{}: closed form not finite at {p:?}", self.id)));
        }
        Ok(BoundIdentity {
            id: self.id.to_string(),
            paper_eq: self.id.to_string(),
            params: p.into_iter().collect(),
            lhs: parts.lhs,
            closed_form: parts.closed,
            route: parts.route,
            tolerance: parts.tolerance,
        })
    }

    /// The stated integrand as a function of real v.
    pub fn build_integrand(&self, overrides: &Params) -> Result<LineFn> {
        Ok(self.parts(overrides)?.lhs.integrand)
    }

    pub fn to_json(&self) -> Value {
        let mut params = serde_json::Map::new();
        for p in &self.params {
            params.insert(
                p.name.to_string(),
                json!({"default": p.default, "min": finite_or_null(p.min), "max": finite_or_null(p.max),
                       "open_min": p.open_min, "open_max": p.open_max}),
            );
        }
        json!({
            "id": self.id,
            "section": self.section,
            "family": self.family.name(),
            "params": params,
            "closed_form_expr": self.closed_form_expr,
            "notes": self.notes,
        })
    }
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// Builds the catalog and checks ids and parameter declarations.
pub fn load_catalog() -> Result<Vec<CatalogEntry>> {
    let mut all = Vec::new();
    all.extend(s3_specific::entries());
    all.extend(s3_ex6::entries());
    all.extend(s3_complex::entries());
    all.extend(s3_fourpole::entries());
    all.extend(s4_pairing::entries());
    all.extend(s4_mult::entries());
    all.extend(s5_trig::entries());
    let mut seen = BTreeSet::new();
    for e in &all {
        if !seen.insert(e.id) {
            return Err(Error::Validation(format!("duplicate catalog id {}", e.id)));
        }
        let mut names = BTreeSet::new();
        for p in &e.params {
            if !names.insert(p.name) {
                return Err(Error::Validation(format!("{}: duplicate parameter {}", e.id, p.name)));
            }
            if !(p.min < p.max) || !p.contains(p.default) {
                return Err(Error::Validation(format!("{}: malformed range for {}", e.id, p.name)));
            }
        }
    }
    all.sort_by(|a, b| a.id.cmp(b.id));
    Ok(all)
}

/// The shared, immutable catalog.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| load_catalog().expect("built-in catalog is valid"))
}

pub fn find(id: &str) -> Result<&'static CatalogEntry> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Ids of the headline identities.
pub const HEADLINE_IDS: [&str; 17] = [
    "IntG3", "IntG5b", "K1d", "Ex6ApB", "DiffSq", "ScMin", "J1ab", "Zid", "Ct4bm1", "Ded1", "Ct2d", "FintG3", "Jh",
    "J8b", "FintBx", "CR2b", "Test2G",
];

pub fn headline_suite() -> Vec<&'static CatalogEntry> {
    HEADLINE_IDS.iter().map(|id| find(id).expect("headline id in catalog")).collect()
}

pub fn by_family(f: Family) -> Vec<&'static CatalogEntry> {
    catalog().iter().filter(|e| e.family == f).collect()
}

/// Equation labels covered by the catalog (one entry each).
pub fn paper_equations() -> Vec<&'static str> {
    catalog().iter().map(|e| e.id).collect()
}

/// Verify one entry; binding failures become failed reports.
pub fn verify_entry(entry: &CatalogEntry, overrides: &Params, settings: &VerificationSettings) -> VerificationReport {
    match entry.bind(overrides) {
        Ok(b) => master::verify(&b, settings),
        Err(e) => {
            let params = entry.resolve_params(overrides).unwrap_or_else(|_| overrides.clone());
            master::failed_report(entry.id, params.into_iter().collect(), &e)
        }
    }
}

/// One report per value of `param`, in the given order.
pub fn sweep(
    entry: &CatalogEntry,
    param: &str,
    values: &[f64],
    base: &Params,
    settings: &VerificationSettings,
    jobs: usize,
) -> Result<Vec<VerificationReport>> {
    if !entry.params.iter().any(|p| p.name == param) {
        return Err(Error::Validation(format!("{} has no parameter '{param}'", entry.id)));
    }
    let runs: Vec<Params> = values
        .iter()
        .map(|&v| {
            let mut p = base.clone();
            p.insert(param.to_string(), v);
            p
        })
        .collect();
    Ok(in_pool(jobs, || runs.par_iter().map(|p| verify_entry(entry, p, settings)).collect()))
}

/// Verify a list of entries at their defaults; reports come back sorted by id.
pub fn run_entries(entries: &[&CatalogEntry], settings: &VerificationSettings, jobs: usize) -> Vec<VerificationReport> {
    let empty = Params::new();
    let mut out: Vec<VerificationReport> =
        in_pool(jobs, || entries.par_iter().map(|e| verify_entry(e, &empty, settings)).collect());
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

fn in_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

pub fn catalog_json() -> Value {
    Value::Array(catalog().iter().map(CatalogEntry::to_json).collect())
}
