//! Structured run reports for the CLI: one report per invocation,
//! renderable as human text, JSON, or CSV. Exit status is derived from
//! the failure list.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One labeled result: a value, a pass/fail status, or both.
#[derive(Debug, Clone)]
pub struct Row {
    pub label: String,
    pub value: Option<String>,
    pub pass: Option<bool>,
}

impl Row {
    pub fn value(label: impl Into<String>, v: impl ToString) -> Self {
        Row {
            label: label.into(),
            value: Some(v.to_string()),
            pass: None,
        }
    }

    pub fn status(label: impl Into<String>, pass: bool) -> Self {
        Row {
            label: label.into(),
            value: None,
            pass: Some(pass),
        }
    }
}

/// A disagreement between two computation routes at one index.
#[derive(Debug, Clone)]
pub struct Discrepancy {
    pub method_a: String,
    pub method_b: String,
    pub index: String,
    pub value_a: String,
    pub value_b: String,
}

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub results: Vec<Row>,
    pub timings: Vec<(String, Duration)>,
    pub failures: Vec<Discrepancy>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl ToString) {
        self.parameters.push((key.into(), value.to_string()));
    }

    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format, show_timing: bool) -> String {
        match format {
            Format::Text => self.render_text(show_timing),
            Format::Json => self.render_json(show_timing),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self, show_timing: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for row in &self.results {
            match (&row.value, row.pass) {
                (Some(v), Some(p)) => {
                    out.push_str(&format!("{} = {} [{}]\n", row.label, v, pf(p)))
                }
                (Some(v), None) => out.push_str(&format!("{} = {}\n", row.label, v)),
                (None, Some(p)) => out.push_str(&format!("{}: {}\n", row.label, pf(p))),
                (None, None) => out.push_str(&format!("{}\n", row.label)),
            }
        }
        if show_timing {
            for (label, d) in &self.timings {
                out.push_str(&format!("time[{label}] = {:.3} ms\n", d.as_secs_f64() * 1e3));
            }
        }
        if self.failures.is_empty() {
            out.push_str("status: ok\n");
        } else {
            out.push_str(&format!("status: {} failure(s)\n", self.failures.len()));
        }
        out
    }

    fn render_json(&self, show_timing: bool) -> String {
        let params: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                obj.insert("label".into(), Value::String(row.label.clone()));
                if let Some(v) = &row.value {
                    insert_numeric(&mut obj, "value", v);
                }
                if let Some(p) = row.pass {
                    obj.insert("status".into(), Value::String(pf(p).into()));
                }
                Value::Object(obj)
            })
            .collect();
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "method_a": f.method_a,
                    "method_b": f.method_b,
                    "index": f.index,
                    "value_a": f.value_a,
                    "value_b": f.value_b,
                })
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.clone()));
        doc.insert("parameters".into(), Value::Object(params));
        doc.insert("results".into(), Value::Array(results));
        if show_timing {
            let timings: Map<String, Value> = self
                .timings
                .iter()
                .map(|(k, d)| (k.clone(), json!(d.as_secs_f64() * 1e3)))
                .collect();
            doc.insert("timings_ms".into(), Value::Object(timings));
        }
        doc.insert("failures".into(), Value::Array(failures));
        doc.insert("ok".into(), Value::Bool(self.failures.is_empty()));
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json render");
        s.push('\n');
        s
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("label,value,status\n");
        for row in &self.results {
            out.push_str(&format!(
                "{},{},{}\n",
                csv_escape(&row.label),
                csv_escape(row.value.as_deref().unwrap_or("")),
                row.pass.map(pf).unwrap_or(""),
            ));
        }
        out
    }
}

fn pf(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// Numbers that fit in i64 go out as JSON numbers; anything larger goes
/// out as a decimal string with a sibling `"bigint": true` flag, so any
/// consumer can parse without precision loss.
fn insert_numeric(obj: &mut Map<String, Value>, key: &str, v: &str) {
    if let Ok(parsed) = v.parse::<BigInt>() {
        if let Ok(small) = i64::try_from(&parsed) {
            obj.insert(key.into(), json!(small));
            return;
        }
        obj.insert(key.into(), Value::String(v.into()));
        obj.insert("bigint".into(), Value::Bool(true));
        return;
    }
    obj.insert(key.into(), Value::String(v.into()));
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
