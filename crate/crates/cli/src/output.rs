//! Rendering of tables, reports and rasters. Everything here is a pure
//! function of its inputs, so identical runs produce identical bytes.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use ncosc::{DensityGrid, Rational};
use serde_json::{json, Map, Value};

/// Round-trip-safe float text: 17 significant digits.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Exact(Rational),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => float(*v),
            Cell::Exact(v) => v.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => json!(v),
            Cell::Exact(v) => json!(v.to_string()),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<Rational> for Cell {
    fn from(v: Rational) -> Self {
        Cell::Exact(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// A result table with leading `key=value` metadata.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub meta: Vec<(String, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), ..Default::default() }
    }

    pub fn meta(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.meta.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Metadata as `# key=value` comment lines, then a header and rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.meta {
            s.push_str(&format!("# {k}={}\n", v.csv()));
        }
        if !self.columns.is_empty() {
            s.push_str(&self.columns.join(","));
            s.push('\n');
        }
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let meta: Map<String, Value> = self.meta.iter().map(|(k, v)| (k.clone(), v.json())).collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect();
                Value::Object(obj)
            })
            .collect();
        json!({ "meta": meta, "rows": rows })
    }

    /// Metadata only, as `key: value` lines.
    pub fn to_text(&self) -> String {
        self.meta.iter().map(|(k, v)| format!("{k}: {}\n", v.csv())).collect()
    }
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialise");
    s.push('\n');
    s
}

/// 16-bit binary PGM, max-normalised, with the parameter echo in `#` lines.
pub fn density_pgm(grid: &DensityGrid<f64>, comments: &[String]) -> Vec<u8> {
    let n = grid.resolution;
    let mut out = Vec::with_capacity(64 + 2 * n * n);
    out.extend_from_slice(b"P5\n");
    for c in comments {
        out.extend_from_slice(format!("# {c}\n").as_bytes());
    }
    out.extend_from_slice(format!("{n} {n}\n65535\n").as_bytes());
    let max = grid.max_value();
    for v in &grid.values {
        let level = if max > 0.0 { (v / max * 65535.0).round().clamp(0.0, 65535.0) as u16 } else { 0 };
        out.extend_from_slice(&level.to_be_bytes());
    }
    out
}

/// Raw `|Psi|^2` values, one raster row per line, top row first.
pub fn density_csv(grid: &DensityGrid<f64>, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        s.push_str(&format!("# {c}\n"));
    }
    for row in grid.values.chunks(grid.resolution) {
        let cells: Vec<String> = row.iter().map(|v| float(*v)).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

/// Writes to `path`, or to standard output when absent.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, bytes),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()
        }
    }
}
