use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use super::CliError;
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// Aligned columns for reading.
    #[default]
    Plain,
    Csv,
    Json,
}

/// One table cell. Big numbers and fractions are always `Str` so that no
/// consumer parses them as floats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Str(String),
    Int(u64),
    Bool(bool),
    Null,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Str(s) => Value::String(s.clone()),
            Cell::Int(i) => json!(i),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Null => Value::Null,
        }
    }
}

/// Rows rendered identically in every format, in insertion order.
#[derive(Debug, Clone)]
pub struct Table {
    command: String,
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut t = Self::new(
            "verify",
            &[
                "identity",
                "from",
                "to",
                "passed",
                "failure_index",
                "lhs",
                "rhs",
                "value",
            ],
        );
        for r in reports {
            let (from, to) = r.range();
            let fail = r.first_failure();
            t.push(vec![
                Cell::Str(r.identity().to_string()),
                Cell::Int(from),
                Cell::Int(to),
                Cell::Bool(r.passed()),
                fail.map_or(Cell::Null, |f| Cell::Int(f.index)),
                fail.map_or(Cell::Null, |f| Cell::Str(f.lhs.clone())),
                fail.map_or(Cell::Null, |f| Cell::Str(f.rhs.clone())),
                r.value().map_or(Cell::Null, |v| Cell::Str(v.to_string())),
            ]);
        }
        t
    }

    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            OutputFormat::Plain => self.write_plain(out)?,
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::text))?;
                }
                w.flush()?;
            }
            OutputFormat::Json => {
                let results: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .columns
                            .iter()
                            .cloned()
                            .zip(row.iter().map(Cell::json))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let doc = json!({ "command": self.command, "results": results });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }

    fn write_plain(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| match c {
                        Cell::Null => "-".to_string(),
                        c => c.text(),
                    })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([self.columns[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |out: &mut dyn Write, fields: &[String]| -> std::io::Result<()> {
            // first column (a label) left-aligned, the rest right-aligned
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (f, w))| {
                    if i == 0 {
                        format!("{f:<w$}")
                    } else {
                        format!("{f:>w$}")
                    }
                })
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end())
        };
        line(out, &self.columns)?;
        for r in &cells {
            line(out, r)?;
        }
        Ok(())
    }
}
