//! `glasser` — batch verification of the catalogued integral identities.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glasser::catalog::{self, CatalogEntry, Family, Params};
use glasser::master::{VerificationReport, VerificationSettings};
use glasser::report::{self, num, Format};
use glasser::{specfun, Context, C64};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "glasser", version, about = "Verify integral identities from the extended Glasser master theorem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a suite of catalog entries at their default parameters.
    RunCatalog {
        /// headline, all, or family:<name>
        #[arg(long, default_value = "all")]
        suite: String,
        /// Print the catalog description (JSON) instead of running it.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Verify one entry, optionally with parameter overrides.
    Verify {
        #[arg(long)]
        entry: String,
        /// name=value, repeatable
        #[arg(long = "param", value_parser = parse_assignment)]
        params: Vec<(String, f64)>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify one entry over a list of values of one parameter.
    Sweep {
        #[arg(long)]
        entry: String,
        /// Parameter to vary.
        #[arg(long)]
        param: String,
        /// Comma-separated values.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        values: Vec<f64>,
        /// Fixed overrides for the other parameters (name=value, repeatable).
        #[arg(long = "set", value_parser = parse_assignment)]
        fixed: Vec<(String, f64)>,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a special function at a complex point.
    SpecfunEval {
        #[arg(long = "fn", value_enum)]
        function: Function,
        /// Argument as re or re,im.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: String,
        /// Hurwitz shift.
        #[arg(long, default_value_t = 1.0)]
        w: f64,
        /// Derivative order or table index.
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the weighted poles and residues behind an entry's prediction.
    Residues {
        #[arg(long)]
        entry: String,
        #[arg(long = "param", value_parser = parse_assignment)]
        params: Vec<(String, f64)>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to GLASSER_JOBS or the number of CPUs.
    #[arg(long, env = "GLASSER_JOBS")]
    jobs: Option<usize>,
    /// Seed for the criterion sample points.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Report 0 seconds for every entry, making output byte-identical across runs.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
            OutFormat::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Zeta,
    Hurwitz,
    ZetaDeriv,
    Gamma,
    LnGamma,
    Xi,
    Upsilon,
    Stieltjes,
    Euler,
}

/// Config errors exit with 2, failed verifications with 1.
enum Failure {
    Config(String),
    Verification,
}

impl From<glasser::Error> for Failure {
    fn from(e: glasser::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn parse_assignment(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got '{s}'"))?;
    let v: f64 = v.trim().parse().map_err(|_| format!("'{v}' is not a number"))?;
    Ok((k.trim().to_string(), v))
}

fn parse_complex(s: &str) -> Result<C64, Failure> {
    let bad = || Failure::Config(format!("expected re or re,im, got '{s}'"));
    let mut parts = s.split(',').map(|p| p.trim().parse::<f64>());
    let re = parts.next().ok_or_else(bad)?.map_err(|_| bad())?;
    let im = match parts.next() {
        Some(x) => x.map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(C64::new(re, im))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::RunCatalog { suite, list, common } => {
            let entries = select_suite(&suite)?;
            if list {
                let v = Value::Array(entries.iter().map(|e| e.to_json()).collect());
                return write_out(common.out.as_ref(), &(serde_json::to_string_pretty(&v).expect("json") + "\n"));
            }
            let settings = settings(&common)?;
            let reports = catalog::run_entries(&entries, &settings, jobs(&common));
            emit(reports, &common)
        }
        Command::Verify { entry, params, common } => {
            let e = catalog::find(&entry)?;
            let p = overrides(e, params)?;
            let settings = settings(&common)?;
            let r = catalog::verify_entry(e, &p, &settings);
            emit(vec![r], &common)
        }
        Command::Sweep { entry, param, values, fixed, common } => {
            let e = catalog::find(&entry)?;
            let base = overrides(e, fixed)?;
            for &v in &values {
                let mut p = base.clone();
                p.insert(param.clone(), v);
                e.resolve_params(&p)?;
            }
            let settings = settings(&common)?;
            let reports = catalog::sweep(e, &param, &values, &base, &settings, jobs(&common))?;
            emit(reports, &common)
        }
        Command::SpecfunEval { function, s, w, k, format, out } => {
            let s = parse_complex(&s)?;
            let value = eval_function(function, s, w, k)?;
            let text = match format {
                OutFormat::Json => format!(
                    "{{\"fn\":\"{}\",\"s\":{},\"w\":{},\"k\":{k},\"value\":{}}}\n",
                    function.to_possible_value().expect("named").get_name(),
                    complex_json(s),
                    num(w),
                    complex_json(value)
                ),
                OutFormat::Csv => format!("re,im\n{},{}\n", num(value.re), num(value.im)),
                OutFormat::Text => format!("{} {}i\n", num(value.re), num(value.im)),
            };
            write_out(out.as_ref(), &text)
        }
        Command::Residues { entry, params, format, out } => {
            let e = catalog::find(&entry)?;
            let p = overrides(e, params)?;
            let bound = e.bind(&p)?;
            let sums = bound.route.masters();
            let mut rows = Vec::new();
            for (term, m) in sums.iter().enumerate() {
                for (pole, r) in m.residues()? {
                    rows.push((term, pole, r));
                }
            }
            let prediction = bound.route.evaluate()?;
            write_out(out.as_ref(), &render_residues(&bound.id, &rows, prediction, format))
        }
    }
}

fn select_suite(suite: &str) -> Result<Vec<&'static CatalogEntry>, Failure> {
    match suite {
        "headline" => Ok(catalog::headline_suite()),
        "all" => Ok(catalog::catalog().iter().collect()),
        s => match s.strip_prefix("family:") {
            Some(name) => {
                let f = Family::from_name(name).ok_or_else(|| {
                    let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                    Failure::Config(format!("unknown family '{name}' (known: {})", names.join(", ")))
                })?;
                Ok(catalog::by_family(f))
            }
            None => Err(Failure::Config(format!("unknown suite '{s}' (headline, all, family:<name>)"))),
        },
    }
}

fn overrides(e: &CatalogEntry, given: Vec<(String, f64)>) -> Result<Params, Failure> {
    let p: Params = given.into_iter().collect();
    e.resolve_params(&p)?;
    Ok(p)
}

fn settings(c: &Common) -> Result<VerificationSettings, Failure> {
    if !(c.tolerance > 0.0 && c.tolerance.is_finite()) {
        return Err(Failure::Config(format!("tolerance must be a positive number, got {}", c.tolerance)));
    }
    if c.jobs == Some(0) {
        return Err(Failure::Config("jobs must be at least 1".into()));
    }
    Ok(VerificationSettings { tolerance: c.tolerance, seed: c.seed, ..VerificationSettings::default() })
}

fn jobs(c: &Common) -> usize {
    c.jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

fn emit(mut reports: Vec<VerificationReport>, c: &Common) -> Result<(), Failure> {
    if c.no_timings {
        for r in &mut reports {
            r.seconds = 0.0;
        }
    }
    let mut text = report::render(&reports, c.format.into());
    if !text.ends_with('\n') {
        text.push('\n');
    }
    write_out(c.out.as_ref(), &text)?;
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Config(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure::Config(format!("stdout: {e}")))
        }
    }
}

fn eval_function(f: Function, s: C64, w: f64, k: usize) -> Result<C64, Failure> {
    let ctx = Context::default();
    let real = |x: f64| C64::new(x, 0.0);
    let v = match f {
        Function::Zeta => specfun::riemann_zeta(s, &ctx)?,
        Function::Hurwitz => specfun::hurwitz_zeta(s, w, &ctx)?,
        Function::ZetaDeriv => specfun::zeta_derivative(s, k, &ctx)?.0,
        Function::Gamma => specfun::gamma(s)?,
        Function::LnGamma => specfun::ln_gamma(s)?,
        Function::Xi => specfun::xi(s, &ctx)?,
        Function::Upsilon => specfun::upsilon(s, &ctx)?,
        Function::Stieltjes => real(specfun::stieltjes_constant(k, &ctx)?),
        Function::Euler => real(specfun::euler_number_f64(k, &ctx)?),
    };
    Ok(v)
}

fn complex_json(z: C64) -> String {
    format!("{{\"re\":{},\"im\":{}}}", num(z.re), num(z.im))
}

fn render_residues(id: &str, rows: &[(usize, glasser::residues::PoleSpec, C64)], total: C64, f: OutFormat) -> String {
    match f {
        OutFormat::Json => {
            let poles: Vec<String> = rows
                .iter()
                .map(|(t, p, r)| {
                    format!(
                        "{{\"term\":{t},\"location\":{},\"order\":{},\"weight\":{},\"residue\":{}}}",
                        complex_json(p.location),
                        p.order,
                        num(p.boundary_weight),
                        complex_json(*r)
                    )
                })
                .collect();
            format!(
                "{{\"id\":{},\"poles\":[{}],\"rhs_residues\":{}}}\n",
                json!(id),
                poles.join(","),
                complex_json(total)
            )
        }
        OutFormat::Csv => {
            let mut s = String::from("term,location_re,location_im,order,weight,residue_re,residue_im\n");
            for (t, p, r) in rows {
                s += &format!(
                    "{t},{},{},{},{},{},{}\n",
                    num(p.location.re),
                    num(p.location.im),
                    p.order,
                    num(p.boundary_weight),
                    num(r.re),
                    num(r.im)
                );
            }
            s
        }
        OutFormat::Text => {
            let mut s = format!("{id}\n");
            for (t, p, r) in rows {
                s += &format!(
                    "  [{t}] v = {:+.6} {:+.6}i  order {}  weight {}  Res = {:+.12e} {:+.12e}i\n",
                    p.location.re, p.location.im, p.order, p.boundary_weight, r.re, r.im
                );
            }
            s += &format!("  prediction = {:+.15e} {:+.15e}i\n", total.re, total.im);
            s
        }
    }
}
