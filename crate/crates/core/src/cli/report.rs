//! A rendered command result: a titled table plus notes, emitted as
//! aligned text, CSV or JSON.

use crate::evaluation::ToleranceBand;
use crate::present;
use serde_json::{Map, Value};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One table cell. `Shown` carries a display string for text output next to
/// the full-precision value used by CSV and JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Num(f64),
    Shown { value: f64, text: String, band: Option<ToleranceBand> },
    /// Pre-rounded text, identical in every format, colored by band in text.
    Label { text: String, band: ToleranceBand },
    Empty,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn shown(value: f64, text: String) -> Cell {
        Cell::Shown { value, text, band: None }
    }

    pub fn banded(value: f64, text: String, band: ToleranceBand) -> Cell {
        Cell::Shown { value, text, band: Some(band) }
    }

    fn machine(&self) -> String {
        match self {
            Cell::Text(s) | Cell::Label { text: s, .. } => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Num(v) | Cell::Shown { value: v, .. } => present::number(*v),
            Cell::Empty => String::new(),
        }
    }

    fn human(&self) -> String {
        match self {
            Cell::Shown { text, .. } => text.clone(),
            other => other.machine(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) | Cell::Label { text: s, .. } => Value::String(s.clone()),
            Cell::Int(n) => Value::from(*n),
            Cell::Num(v) | Cell::Shown { value: v, .. } => {
                serde_json::Number::from_f64(*v).map(Value::Number).unwrap_or(Value::Null)
            }
            Cell::Empty => Value::Null,
        }
    }

    fn band(&self) -> Option<ToleranceBand> {
        match self {
            Cell::Shown { band, .. } => *band,
            Cell::Label { band, .. } => Some(*band),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub title: String,
    pub meta: Map<String, Value>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Warnings and remarks; printed under the text table, sent to stderr
    /// for the other formats.
    pub notes: Vec<String>,
}

/// Rendering switches.
#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub color: bool,
    /// Header comment with a timestamp; off for reproducible output.
    pub stamp: Option<u64>,
}

fn paint(band: ToleranceBand, s: &str) -> String {
    let code = match band {
        ToleranceBand::Target => "32",
        ToleranceBand::Acceptable => "33",
        ToleranceBand::MinimallyAcceptable => "38;5;208",
        ToleranceBand::Unacceptable => "31",
    };
    format!("\x1b[{code}m{s}\x1b[0m")
}

fn stamp_line(prefix: &str, secs: u64) -> String {
    format!("{prefix} generated by binom-rare {} at unix time {secs}\n", env!("CARGO_PKG_VERSION"))
}

impl Report {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Report {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, style: Style) -> String {
        match format {
            Format::Text => self.render_text(style),
            Format::Csv => self.render_csv(style),
            Format::Json => self.render_json(style),
        }
    }

    pub fn render_csv(&self, style: Style) -> String {
        let mut out = String::new();
        if let Some(secs) = style.stamp {
            out.push_str(&stamp_line("#", secs));
        }
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::machine)).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8"));
        out
    }

    pub fn render_json(&self, style: Style) -> String {
        let mut meta = self.meta.clone();
        meta.insert("title".into(), Value::String(self.title.clone()));
        if let Some(secs) = style.stamp {
            meta.insert("generated_unix".into(), Value::from(secs));
        }
        if !self.notes.is_empty() {
            meta.insert("notes".into(), self.notes.iter().cloned().map(Value::String).collect());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect())
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("meta".into(), Value::Object(meta));
        doc.insert("rows".into(), Value::Array(rows));
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self, style: Style) -> String {
        let mut out = String::new();
        if let Some(secs) = style.stamp {
            out.push_str(&stamp_line("#", secs));
        }
        if !self.title.is_empty() {
            let _ = writeln!(out, "{}", self.title);
        }
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(Cell::human).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| cells.iter().map(|r| r[j].len()).chain([self.columns[j].len()]).max().unwrap_or(0))
            .collect();
        let line = |parts: Vec<String>| parts.join("  ").trim_end().to_string();
        let _ = writeln!(
            out,
            "{}",
            line(self.columns.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect())
        );
        for (row, shown) in self.rows.iter().zip(&cells) {
            let parts = row
                .iter()
                .zip(shown)
                .zip(&widths)
                .map(|((cell, s), w)| {
                    let padded = format!("{s:>w$}");
                    match cell.band() {
                        Some(b) if style.color => paint(b, &padded),
                        _ => padded,
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", line(parts));
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}
