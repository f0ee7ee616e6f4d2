//! Deterministic JSON, CSV and plain-text rendering.
//!
//! Outputs are byte-identical for identical inputs: record fields keep
//! insertion order, floats print through Rust's shortest round-trip
//! formatter, and nothing depends on hash iteration order.

use std::fmt::Write;

pub enum Value {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    List(Vec<Value>),
    Record(Vec<(&'static str, Value)>),
}

impl Value {
    pub fn opt_num(x: Option<f64>) -> Value {
        x.map(Value::Num).unwrap_or(Value::Null)
    }

    pub fn opt_int(x: Option<i64>) -> Value {
        x.map(Value::Int).unwrap_or(Value::Null)
    }

    pub fn opt_bool(x: Option<bool>) -> Value {
        x.map(Value::Bool).unwrap_or(Value::Null)
    }

    pub fn strings<I: IntoIterator<Item = String>>(items: I) -> Value {
        Value::List(items.into_iter().map(Value::Str).collect())
    }
}

/// Shortest decimal that parses back to the same f64. `20.0` prints as
/// `20`, so integral bounds appear as integers; `-0.0` is folded into `0`.
fn number(x: f64) -> String {
    if x == 0.0 {
        String::from("0")
    } else if x.is_finite() {
        format!("{x}")
    } else {
        String::from("null")
    }
}

pub fn json(value: &Value) -> String {
    let mut out = String::new();
    write_json(&mut out, value);
    out
}

fn write_json(out: &mut String, value: &Value) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Int(i) => {
            let _ = write!(out, "{i}");
        }
        Value::Num(x) => out.push_str(&number(*x)),
        Value::Str(s) => write_json_string(out, s),
        Value::List(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_json(out, item);
            }
            out.push(']');
        }
        Value::Record(fields) => {
            out.push('{');
            for (i, (key, item)) in fields.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_json_string(out, key);
                out.push_str(": ");
                write_json(out, item);
            }
            out.push('}');
        }
    }
}

fn write_json_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

/// One cell of a CSV row. Lists flatten with `;` so a row stays one line.
fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Int(i) => i.to_string(),
        Value::Num(x) => number(*x),
        Value::Str(s) => s.clone(),
        Value::List(items) => items
            .iter()
            .map(cell)
            .collect::<Vec<_>>()
            .join(";"),
        Value::Record(fields) => fields
            .iter()
            .map(|(_, v)| cell(v))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A record renders as a header line plus one data row; a list of records
/// shares one header. Scalars render as a bare cell.
pub fn csv(value: &Value) -> String {
    let rows: Vec<&Value> = match value {
        Value::List(items) => items.iter().collect(),
        other => vec![other],
    };
    let mut out = String::new();
    let mut header_done = false;
    for row in rows {
        match row {
            Value::Record(fields) => {
                if !header_done {
                    let keys: Vec<String> =
                        fields.iter().map(|(k, _)| csv_escape(k)).collect();
                    out.push_str(&keys.join(","));
                    out.push('\n');
                    header_done = true;
                }
                let cells: Vec<String> =
                    fields.iter().map(|(_, v)| csv_escape(&cell(v))).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            other => {
                out.push_str(&csv_escape(&cell(other)));
                out.push('\n');
            }
        }
    }
    out.pop();
    out
}

/// `key = value` lines for a record; tables fall back to CSV, which is
/// already the readable form for them.
pub fn text(value: &Value) -> String {
    match value {
        Value::Record(fields) => {
            let lines: Vec<String> = fields
                .iter()
                .map(|(k, v)| format!("{k} = {}", cell(v)))
                .collect();
            lines.join("\n")
        }
        Value::List(_) => csv(value),
        other => cell(other),
    }
}
