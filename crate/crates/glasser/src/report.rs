//! Serialization of verification reports: JSON (17 significant digits,
//! round-trippable), CSV and a plain-text table.

use std::fmt::Write as _;

use serde_json::Value;

use crate::master::VerificationReport;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Validation(format!("unknown format '{other}'"))),
        }
    }
}

/// A finite number with 17 significant digits; non-finite values map to null.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn complex(z: C64) -> String {
    format!("{{\"re\":{},\"im\":{}}}", num(z.re), num(z.im))
}

pub fn report_to_json(r: &VerificationReport) -> String {
    let mut params = String::from("{");
    for (k, (name, v)) in r.params.iter().enumerate() {
        if k > 0 {
            params.push(',');
        }
        let _ = write!(params, "{}:{}", string(name), num(*v));
    }
    params.push('}');
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"id\":{},\"paper_eq\":{},\"params\":{},\"lhs\":{{\"re\":{},\"im\":{},\"err\":{}}},\"rhs_closed\":{},\
         \"rhs_residues\":{},\"criterion_dev\":{},\"residual_closed\":{},\"residual_residues\":{},\"pass\":{},\
         \"seconds\":{}",
        string(&r.id),
        string(&r.paper_eq),
        params,
        num(r.lhs.re),
        num(r.lhs.im),
        num(r.lhs_error),
        complex(r.rhs_closed),
        complex(r.rhs_residues),
        num(r.criterion_dev),
        num(r.residual_closed),
        num(r.residual_residues),
        r.pass,
        num(r.seconds),
    );
    if let Some(e) = &r.error {
        let _ = write!(out, ",\"error\":{}", string(e));
    }
    out.push('}');
    out
}

/// JSON array, one report per line.
pub fn reports_to_json(rs: &[VerificationReport]) -> String {
    let body: Vec<String> = rs.iter().map(report_to_json).collect();
    format!("[\n{}\n]\n", body.join(",\n"))
}

fn get_f64(v: &Value, key: &str) -> Result<f64> {
    match v.get(key) {
        Some(Value::Null) => Ok(f64::NAN),
        Some(x) => x.as_f64().ok_or_else(|| Error::Validation(format!("field {key} is not a number"))),
        None => Err(Error::Validation(format!("missing field {key}"))),
    }
}

fn get_complex(v: &Value, key: &str) -> Result<C64> {
    let o = v.get(key).ok_or_else(|| Error::Validation(format!("missing field {key}")))?;
    Ok(C64::new(get_f64(o, "re")?, get_f64(o, "im")?))
}

fn get_str(v: &Value, key: &str) -> Result<String> {
    v.get(key)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| Error::Validation(format!("missing string field {key}")))
}

pub fn report_from_value(v: &Value) -> Result<VerificationReport> {
    let params = v
        .get("params")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Validation("missing params".into()))?
        .iter()
        .map(|(k, x)| Ok((k.clone(), if x.is_null() { f64::NAN } else { x.as_f64().ok_or_else(|| Error::Validation(format!("param {k}")))? })))
        .collect::<Result<Vec<_>>>()?;
    let lhs = v.get("lhs").ok_or_else(|| Error::Validation("missing lhs".into()))?;
    Ok(VerificationReport {
        id: get_str(v, "id")?,
        paper_eq: get_str(v, "paper_eq")?,
        params,
        lhs: C64::new(get_f64(lhs, "re")?, get_f64(lhs, "im")?),
        lhs_error: get_f64(lhs, "err")?,
        rhs_closed: get_complex(v, "rhs_closed")?,
        rhs_residues: get_complex(v, "rhs_residues")?,
        criterion_dev: get_f64(v, "criterion_dev")?,
        residual_closed: get_f64(v, "residual_closed")?,
        residual_residues: get_f64(v, "residual_residues")?,
        pass: v.get("pass").and_then(Value::as_bool).ok_or_else(|| Error::Validation("missing pass".into()))?,
        seconds: get_f64(v, "seconds")?,
        error: v.get("error").and_then(Value::as_str).map(str::to_string),
    })
}

pub fn reports_from_json(s: &str) -> Result<Vec<VerificationReport>> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Validation(format!("invalid JSON: {e}")))?;
    match v {
        Value::Array(items) => items.iter().map(report_from_value).collect(),
        obj @ Value::Object(_) => Ok(vec![report_from_value(&obj)?]),
        _ => Err(Error::Validation("expected a report or an array of reports".into())),
    }
}

pub const CSV_HEADER: &str = "id,paper_eq,params,lhs_re,lhs_im,lhs_err,rhs_closed_re,rhs_closed_im,rhs_residues_re,\
rhs_residues_im,criterion_dev,residual_closed,residual_residues,pass,seconds,error";

pub fn reports_to_csv(rs: &[VerificationReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rs {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={}", num(*v))).collect();
        let err = r.error.as_deref().unwrap_or("").replace('"', "'");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},\"{}\"",
            r.id,
            r.paper_eq,
            params.join(";"),
            num(r.lhs.re),
            num(r.lhs.im),
            num(r.lhs_error),
            num(r.rhs_closed.re),
            num(r.rhs_closed.im),
            num(r.rhs_residues.re),
            num(r.rhs_residues.im),
            num(r.criterion_dev),
            num(r.residual_closed),
            num(r.residual_residues),
            r.pass,
            num(r.seconds),
            err
        );
    }
    out
}

pub fn reports_to_text(rs: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:>24} {:>24} {:>10} {:>10} {:>10} {:>8} {:>5}",
        "eq", "lhs (re)", "closed (re)", "res_cf", "res_rs", "crit", "sec", "pass"
    );
    for r in rs {
        let _ = writeln!(
            out,
            "{:<10} {:>24.16e} {:>24.16e} {:>10.2e} {:>10.2e} {:>10.2e} {:>8.2} {:>5}",
            r.paper_eq,
            r.lhs.re,
            r.rhs_closed.re,
            r.residual_closed,
            r.residual_residues,
            r.criterion_dev,
            r.seconds,
            if r.pass { "ok" } else { "FAIL" }
        );
        if !r.params.is_empty() {
            let p: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "           {}", p.join(", "));
        }
        if let Some(e) = &r.error {
            let _ = writeln!(out, "           error: {e}");
        }
    }
    let passed = rs.iter().filter(|r| r.pass).count();
    let _ = writeln!(out, "{passed}/{} passed", rs.len());
    out
}

pub fn render(rs: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => reports_to_json(rs),
        Format::Csv => reports_to_csv(rs),
        Format::Text => reports_to_text(rs),
    }
}
