//! JSON and CSV rendering. Floats go to CSV with 17 significant digits and
//! to JSON in shortest round-trip form; both parse back to the same `f64`.

use clap::ValueEnum;
use gegen_core::verify::{VerificationReport, VerificationRow};
use gegen_core::Complex64;
use serde_json::{json, Map, Value};

use crate::commands::Outcome;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// One evaluated point, or the error it produced.
#[derive(Debug, Clone)]
pub struct Record {
    pub params: Vec<(String, String)>,
    pub outcome: Result<Outcome, String>,
    /// Pass threshold on the relative error, for rows with a comparator.
    pub tolerance: Option<f64>,
}

impl Record {
    fn passed(&self) -> Option<bool> {
        let outcome = self.outcome.as_ref().ok()?;
        let rel = outcome.rel_error()?;
        let tol = self.tolerance?;
        Some(outcome.value.converged && rel <= tol)
    }
}

pub fn csv_float(v: f64) -> String {
    if v.is_nan() {
        "NaN".to_string()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{v:.16e}")
    }
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn params_json(params: &[(String, String)]) -> Value {
    let map: Map<String, Value> = params
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    Value::Object(map)
}

fn record_json(record: &Record) -> Value {
    let mut obj = Map::new();
    obj.insert("params".into(), params_json(&record.params));
    match &record.outcome {
        Ok(outcome) => {
            let v = &outcome.value;
            obj.insert(
                "result".into(),
                json!({
                    "re": v.value.re,
                    "im": v.value.im,
                    "terms_used": v.terms_used,
                    "tail_estimate": v.tail_estimate,
                    "converged": v.converged,
                }),
            );
            if let Some(c) = outcome.comparator {
                obj.insert("comparator".into(), complex_json(c));
                obj.insert("abs_error".into(), json!(outcome.abs_error()));
                obj.insert("rel_error".into(), json!(outcome.rel_error()));
            }
            if let Some(exact) = &outcome.exact {
                obj.insert("exact".into(), json!(exact));
            }
            if let (Some(tol), Some(pass)) = (record.tolerance, record.passed()) {
                obj.insert("tolerance".into(), json!(tol));
                obj.insert("pass".into(), json!(pass));
            }
        }
        Err(e) => {
            obj.insert("error".into(), json!(e));
        }
    }
    Value::Object(obj)
}

fn to_json_text(value: &Value) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

pub const RECORD_COLUMNS: [&str; 13] = [
    "re",
    "im",
    "terms_used",
    "tail_estimate",
    "converged",
    "comparator_re",
    "comparator_im",
    "abs_error",
    "rel_error",
    "tolerance",
    "pass",
    "exact",
    "error",
];

fn record_csv_fields(record: &Record) -> Vec<String> {
    let opt = |v: Option<f64>| v.map(csv_float).unwrap_or_default();
    match &record.outcome {
        Ok(o) => vec![
            csv_float(o.value.value.re),
            csv_float(o.value.value.im),
            o.value.terms_used.to_string(),
            csv_float(o.value.tail_estimate),
            o.value.converged.to_string(),
            opt(o.comparator.map(|c| c.re)),
            opt(o.comparator.map(|c| c.im)),
            opt(o.abs_error()),
            opt(o.rel_error()),
            opt(record.passed().and(record.tolerance)),
            record.passed().map(|p| p.to_string()).unwrap_or_default(),
            o.exact.clone().unwrap_or_default(),
            String::new(),
        ],
        Err(e) => {
            let mut fields = vec![String::new(); RECORD_COLUMNS.len() - 1];
            fields.push(e.clone());
            fields
        }
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish_csv(writer: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = writer.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
}

/// Renders records that share one command and one parameter set.
pub fn render_records(command: &str, records: &[Record], format: Format, single: bool) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let value = if single && records.len() == 1 {
                let mut obj = match record_json(&records[0]) {
                    Value::Object(obj) => obj,
                    _ => unreachable!("records render as objects"),
                };
                obj.insert("command".into(), json!(command));
                Value::Object(obj)
            } else {
                json!({
                    "command": command,
                    "rows": records.iter().map(record_json).collect::<Vec<_>>(),
                })
            };
            to_json_text(&value)
        }
        Format::Csv => {
            let mut writer = csv_writer();
            let param_names: Vec<&str> = records
                .first()
                .map(|r| r.params.iter().map(|(k, _)| k.as_str()).collect())
                .unwrap_or_default();
            let mut header = vec!["command"];
            header.extend(&param_names);
            header.extend(RECORD_COLUMNS);
            writer.write_record(&header)?;
            for record in records {
                let mut row = vec![command.to_string()];
                row.extend(record.params.iter().map(|(_, v)| v.clone()));
                row.extend(record_csv_fields(record));
                writer.write_record(&row)?;
            }
            finish_csv(writer)
        }
    }
}

fn params_inline(row: &VerificationRow) -> String {
    row.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn verification_row_json(row: &VerificationRow) -> Value {
    json!({
        "suite": row.suite.name(),
        "identity": row.identity,
        "params": params_json(&row.params),
        "lhs": complex_json(row.lhs),
        "series": complex_json(row.series),
        "abs_error": row.abs_error,
        "rel_error": row.rel_error,
        "terms_used": row.terms_used,
        "converged": row.converged,
        "tolerance": row.tolerance,
        "pass": row.passed,
        "error": row.error,
    })
}

pub const VERIFY_COLUMNS: [&str; 14] = [
    "suite",
    "identity",
    "params",
    "lhs_re",
    "lhs_im",
    "series_re",
    "series_im",
    "abs_error",
    "rel_error",
    "terms_used",
    "converged",
    "tolerance",
    "pass",
    "error",
];

pub fn render_verification(
    report: &VerificationReport,
    selection: &str,
    seed: u64,
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let summary: Vec<Value> = report
                .summary()
                .iter()
                .map(|s| json!({ "suite": s.suite.name(), "total": s.total, "passed": s.passed }))
                .collect();
            let value = json!({
                "command": "verify",
                "suite": selection,
                "seed": seed,
                "all_passed": report.all_passed(),
                "summary": summary,
                "rows": report.rows.iter().map(verification_row_json).collect::<Vec<_>>(),
            });
            to_json_text(&value)
        }
        Format::Csv => {
            let mut writer = csv_writer();
            writer.write_record(VERIFY_COLUMNS)?;
            for row in &report.rows {
                writer.write_record([
                    row.suite.name().to_string(),
                    row.identity.clone(),
                    params_inline(row),
                    csv_float(row.lhs.re),
                    csv_float(row.lhs.im),
                    csv_float(row.series.re),
                    csv_float(row.series.im),
                    csv_float(row.abs_error),
                    csv_float(row.rel_error),
                    row.terms_used.to_string(),
                    row.converged.to_string(),
                    csv_float(row.tolerance),
                    row.passed.to_string(),
                    row.error.clone().unwrap_or_default(),
                ])?;
            }
            finish_csv(writer)
        }
    }
}

/// Plain-text summary and failing rows, for standard error.
pub fn verification_digest(report: &VerificationReport) -> String {
    let mut out = String::new();
    for row in report.failures() {
        out.push_str(&format!(
            "FAIL {} {} [{}] rel_error={} terms={} converged={}{}\n",
            row.suite.name(),
            row.identity,
            params_inline(row),
            csv_float(row.rel_error),
            row.terms_used,
            row.converged,
            row.error.as_ref().map(|e| format!(" error={e}")).unwrap_or_default(),
        ));
    }
    for s in report.summary() {
        out.push_str(&format!("{}: {}/{} passed\n", s.suite.name(), s.passed, s.total));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_floats_round_trip() {
        for v in [
            0.1,
            -1.0 / 3.0,
            1e-300,
            6.02214076e23,
            f64::MIN_POSITIVE,
            0.0,
            -0.0,
            5e-324,
        ] {
            let s = csv_float(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
        assert!(csv_float(f64::NAN).parse::<f64>().unwrap().is_nan());
        assert_eq!(csv_float(f64::INFINITY).parse::<f64>().unwrap(), f64::INFINITY);
    }
}
