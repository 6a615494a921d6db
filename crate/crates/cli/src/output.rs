//! Rendering of result tables as JSON, CSV or aligned text.

use serde_json::{json, Map, Value};

use crate::args::Format;

pub const SCHEMA: &str = "as-census/1";

/// A rectangular table plus optional summary values and notes.
#[derive(Debug, Default)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub summary: Map<String, Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, columns: &[&'static str]) -> Self {
        Report {
            command: command.into(),
            columns: columns.to_vec(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) {
        self.params.insert(key.into(), v.into());
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<String, csv::Error> {
        Ok(match format {
            Format::Json => self.json(),
            Format::Csv => self.csv()?,
            Format::Pretty => self.pretty(),
        })
    }

    fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.clone()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "schema": SCHEMA,
            "command": self.command,
            "params": self.params,
            "columns": self.columns,
            "rows": rows,
            "summary": self.summary,
            "notes": self.notes,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("plain values serialize");
        s.push('\n');
        s
    }

    fn csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(cell))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    fn pretty(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let line = |items: Vec<&str>| -> String {
            let padded: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.columns.clone());
        for row in &cells {
            out += &line(row.iter().map(String::as_str).collect());
        }
        if self.rows.is_empty() {
            out += "(no rows)\n";
        }
        for (k, v) in &self.summary {
            out += &format!("{k}: {}\n", cell(v));
        }
        for n in &self.notes {
            out += &format!("note: {n}\n");
        }
        out
    }
}

/// Text form of one cell; nulls are empty.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `Some(x)` as a JSON value, `None` as null.
pub fn opt<T: Into<Value>>(v: Option<T>) -> Value {
    v.map_or(Value::Null, Into::into)
}
