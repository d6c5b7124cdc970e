//! Tables and records in CSV or JSON.
//!
//! CSV has a header row and LF line endings; numbers use Rust's shortest
//! round-trip decimal form. JSON numbers are likewise shortest round-trip.

use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Numeric columns sharing one length.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn write_csv(&self, out: impl Write) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(f64::to_string))?;
        }
        w.flush()?;
        Ok(())
    }

    /// An array with one object per row.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, &v)| (c.to_string(), number(v)))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

/// A command result: a single record or a table.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record(Value),
    Table(Table),
}

impl Output {
    pub fn record(value: impl Serialize) -> Self {
        Output::Record(serde_json::to_value(value).expect("serialisable record"))
    }

    pub fn write(&self, format: Format, mut out: impl Write) -> std::io::Result<()> {
        match (self, format) {
            (Output::Record(v), Format::Json) => {
                serde_json::to_writer(&mut out, v)?;
                out.write_all(b"\n")
            }
            (Output::Table(t), Format::Json) => {
                serde_json::to_writer(&mut out, &t.to_json())?;
                out.write_all(b"\n")
            }
            (Output::Table(t), Format::Csv) => t.write_csv(out).map_err(std::io::Error::other),
            (Output::Record(v), Format::Csv) => write_record_csv(v, out),
        }
    }
}

/// Top-level fields become columns; nested values are written as JSON text.
fn write_record_csv(value: &Value, out: impl Write) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let fields: Vec<(&String, &Value)> = match value {
        Value::Object(map) => map.iter().collect(),
        _ => Vec::new(),
    };
    let cell = |v: &Value| match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    w.write_record(fields.iter().map(|(k, _)| k.as_str()))?;
    w.write_record(fields.iter().map(|(_, v)| cell(v)))?;
    w.flush()
}
