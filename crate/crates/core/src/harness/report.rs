//! Fixed-format serialization of verdicts, sweep tables and summaries.
//!
//! Floats are written with 17 significant digits and a lowercase exponent
//! so repeated runs are byte-identical.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use super::claims::{ClaimVerdict, Mode, Status};
use super::RunSummary;
use crate::error::{Error, Result};

/// `{:.16e}` formatting; non-finite values become `nan`, `inf`, `-inf`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

pub fn fmt_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { "" } else { "+" };
    format!("{}{sign}{}i", fmt_f64(z.re), fmt_f64(z.im))
}

/// A JSON number in the fixed format, or `null` when not finite.
pub fn json_f64(x: f64) -> Box<RawValue> {
    let s = if x.is_finite() { fmt_f64(x) } else { "null".to_string() };
    RawValue::from_string(s).expect("formatted float is valid JSON")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            other => Err(Error::Config(format!("unknown format '{other}' (json, csv, md)"))),
        }
    }
}

/// A rectangular table of preformatted cells.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("| {} |\n|{}|\n", self.header.join(" | "), vec!["---"; self.header.len()].join("|"));
        for r in &self.rows {
            s.push_str(&format!("| {} |\n", r.join(" | ")));
        }
        s
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Reported => "REPORTED",
    }
}

fn mode_str(m: Mode) -> &'static str {
    match m {
        Mode::Assert => "ASSERT",
        Mode::Report => "REPORT",
    }
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    claim: &'a str,
    point: &'a str,
    deviation: Box<RawValue>,
    tolerance: Box<RawValue>,
    order: Box<RawValue>,
    status: &'static str,
    runtime_ms: u64,
    message: Option<&'a str>,
}

#[derive(Serialize)]
struct ClaimSummaryJson<'a> {
    claim: &'a str,
    mode: &'static str,
    points: usize,
    passed: usize,
    failed: usize,
    reported: usize,
    max_deviation: Box<RawValue>,
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    claims: usize,
    assert_failures: usize,
    total_runtime_ms: u64,
    per_claim: Vec<ClaimSummaryJson<'a>>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    verdicts: Vec<VerdictJson<'a>>,
    summary: SummaryJson<'a>,
}

fn verdict_json(v: &ClaimVerdict) -> VerdictJson<'_> {
    VerdictJson {
        claim: &v.claim,
        point: &v.point,
        deviation: json_f64(v.deviation),
        tolerance: json_f64(v.tolerance),
        order: json_f64(v.order),
        status: status_str(v.status),
        runtime_ms: v.runtime_ms,
        message: v.message.as_deref(),
    }
}

pub fn verdicts_json(verdicts: &[ClaimVerdict]) -> String {
    let list: Vec<_> = verdicts.iter().map(verdict_json).collect();
    serde_json::to_string_pretty(&list).expect("serializable") + "\n"
}

pub fn summary_json(summary: &RunSummary) -> String {
    let verdicts = summary.runs.iter().flat_map(|r| r.verdicts.iter()).map(verdict_json).collect();
    let per_claim = summary
        .runs
        .iter()
        .map(|r| {
            let c = r.counts();
            ClaimSummaryJson {
                claim: r.claim.id,
                mode: mode_str(r.claim.mode),
                points: r.verdicts.len(),
                passed: c.0,
                failed: c.1,
                reported: c.2,
                max_deviation: json_f64(r.max_deviation()),
            }
        })
        .collect();
    let doc = ReportJson {
        verdicts,
        summary: SummaryJson {
            claims: summary.runs.len(),
            assert_failures: summary.assert_failures(),
            total_runtime_ms: summary.total_runtime_ms(),
            per_claim,
        },
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn verdict_table(verdicts: &[ClaimVerdict]) -> Table {
    let mut t = Table::new(&["claim", "point", "deviation", "tolerance", "order", "status", "runtime_ms", "message"]);
    for v in verdicts {
        t.push(vec![
            v.claim.clone(),
            v.point.clone(),
            fmt_f64(v.deviation),
            fmt_f64(v.tolerance),
            fmt_f64(v.order),
            status_str(v.status).to_string(),
            v.runtime_ms.to_string(),
            v.message.clone().unwrap_or_default(),
        ]);
    }
    t
}

pub fn summary_table(summary: &RunSummary) -> Table {
    let mut t = Table::new(&["claim", "mode", "points", "passed", "failed", "reported", "max_deviation"]);
    for r in &summary.runs {
        let (p, f, rep) = r.counts();
        t.push(vec![
            r.claim.id.to_string(),
            mode_str(r.claim.mode).to_string(),
            r.verdicts.len().to_string(),
            p.to_string(),
            f.to_string(),
            rep.to_string(),
            fmt_f64(r.max_deviation()),
        ]);
    }
    t
}

/// Full report in the requested format.
pub fn render_summary(summary: &RunSummary, format: Format) -> String {
    let verdicts: Vec<ClaimVerdict> = summary.runs.iter().flat_map(|r| r.verdicts.iter().cloned()).collect();
    match format {
        Format::Json => summary_json(summary),
        Format::Csv => verdict_table(&verdicts).to_csv(),
        Format::Md => {
            let mut s = String::from("# Claim verdicts\n\n");
            s.push_str(&summary_table(summary).to_markdown());
            s.push_str(&format!(
                "\n{} claims, {} assert failures, total runtime {} ms\n\n## Points\n\n",
                summary.runs.len(),
                summary.assert_failures(),
                summary.total_runtime_ms()
            ));
            s.push_str(&verdict_table(&verdicts).to_markdown());
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_fixed() {
        assert_eq!(fmt_f64(2.0 * std::f64::consts::PI), "6.2831853071795862e0");
        assert_eq!(fmt_f64(-1e-300), "-1.0000000000000000e-300");
        assert_eq!(fmt_f64(f64::NAN), "nan");
        assert_eq!(json_f64(f64::NAN).get(), "null");
        assert_eq!(fmt_complex(Complex64::new(1.0, -2.0)), "1.0000000000000000e0-2.0000000000000000e0i");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["x=1,y=2".into(), "3".into()]);
        assert_eq!(t.to_csv(), "a,b\n\"x=1,y=2\",3\n");
        assert!(t.to_markdown().starts_with("| a | b |\n|---|---|\n"));
    }
}
