//! Tabular output: CSV with a fixed header row and locale-independent
//! numbers at 17 significant digits, plus a JSON mirror of the same rows.

use std::io::Write;
use std::path::Path;

use crate::error::CliError;
use crate::OutputFormat;

#[derive(Debug, Clone)]
pub enum Cell {
    Str(String),
    U64(u64),
    F64(f64),
    /// Explicit not-applicable marker.
    Na,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::U64(v) => v.to_string(),
            Cell::F64(v) => fmt_f64(*v),
            Cell::Na => "NA".to_string(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Str(s) => serde_json::Value::String(s.clone()),
            Cell::U64(v) => serde_json::Value::from(*v),
            Cell::F64(v) => {
                if v.is_finite() {
                    serde_json::Value::from(*v)
                } else {
                    serde_json::Value::String(fmt_f64(*v))
                }
            }
            Cell::Na => serde_json::Value::Null,
        }
    }
}

/// 17 significant digits, '.' separator, never locale-dependent.
pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{v:.16e}")
    }
}

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        s.push_str(&self.headers.join(","));
        s.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        let objects: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: serde_json::Map<String, serde_json::Value> = self
                    .headers
                    .iter()
                    .zip(row)
                    .map(|(h, c)| (h.to_string(), c.json()))
                    .collect();
                serde_json::Value::Object(map)
            })
            .collect();
        serde_json::to_string_pretty(&objects).expect("serializable") + "\n"
    }

    /// Write to the requested sink in the requested format.
    pub fn emit(&self, out: Option<&Path>, format: OutputFormat) -> Result<(), CliError> {
        let body = match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        };
        match out {
            Some(path) => std::fs::write(path, body)?,
            None => {
                std::io::stdout().write_all(body.as_bytes())?;
            }
        }
        Ok(())
    }
}
