//! Tabular CSV/JSON output and the run manifest.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::Result;
use crate::tolerances::{Tolerances, TOLERANCES};

/// A table cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    /// Integer column such as a site or block length.
    Int(i64),
    /// Real column.
    Real(f64),
}

impl Value {
    fn to_csv_field(self) -> String {
        match self {
            Value::Int(i) => i.to_string(),
            Value::Real(x) => format!("{x:.16e}"),
        }
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Real(v)
    }
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    /// One header line, comma-separated values, 17 significant digits.
    Csv,
    /// An array of objects keyed by column name.
    Json,
}

/// A named-column table of numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    /// An empty table with the given column names.
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a row; its length must match the column count.
    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    /// Column names.
    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    /// Rows in insertion order.
    pub fn rows(&self) -> &[Vec<Value>] {
        &self.rows
    }

    /// Writes the table in the requested format.
    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
        match format {
            OutputFormat::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                writer.write_record(&self.columns)?;
                for row in &self.rows {
                    writer.write_record(row.iter().map(|v| v.to_csv_field()))?;
                }
                writer.flush()?;
            }
            OutputFormat::Json => {
                let records: Vec<serde_json::Map<String, serde_json::Value>> = self
                    .rows
                    .iter()
                    .map(|row| {
                        self.columns
                            .iter()
                            .cloned()
                            .zip(row.iter().map(|v| serde_json::to_value(v).expect("numbers serialize")))
                            .collect()
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &records)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }

    /// The table rendered as a string.
    pub fn render(&self, format: OutputFormat) -> Result<String> {
        let mut buffer = Vec::new();
        self.write(format, &mut buffer)?;
        Ok(String::from_utf8(buffer).expect("CSV and JSON output is UTF-8"))
    }
}

/// Record of the configuration that produced an output file.
#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    /// Producing tool and version.
    pub version: String,
    /// Subcommand name.
    pub command: String,
    /// Run parameters.
    pub parameters: serde_json::Value,
    /// Tolerance table in effect.
    pub tolerances: Tolerances,
    /// Files written by the run.
    pub outputs: Vec<String>,
    /// Derived quantities reported alongside the table, such as fit results.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<serde_json::Value>,
}

impl Manifest {
    /// A manifest for the given command and parameters.
    pub fn new(command: &str, parameters: serde_json::Value, outputs: Vec<String>) -> Self {
        Self {
            version: format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION")),
            command: command.to_string(),
            parameters,
            tolerances: TOLERANCES,
            outputs,
            summary: None,
        }
    }

    /// Attaches derived quantities to the manifest.
    pub fn with_summary(mut self, summary: serde_json::Value) -> Self {
        self.summary = Some(summary);
        self
    }

    /// Path of the manifest written beside `output`: `<stem>.manifest.json`.
    pub fn path_for(output: &Path) -> PathBuf {
        let stem = output.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        output.with_file_name(format!("{stem}.manifest.json"))
    }

    /// Writes the manifest as pretty JSON.
    pub fn write_to(&self, path: &Path) -> Result<()> {
        let mut file = std::fs::File::create(path)?;
        serde_json::to_writer_pretty(&mut file, self)?;
        writeln!(file)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["site", "value"]);
        t.push(vec![0usize.into(), 0.1.into()]);
        t.push(vec![1usize.into(), (-2.0f64 / 3.0).into()]);
        t
    }

    #[test]
    fn csv_uses_seventeen_significant_digits() {
        let text = sample().render(OutputFormat::Csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "site,value");
        assert_eq!(lines[1], "0,1.0000000000000001e-1");
        let value: f64 = lines[2].split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(value, -2.0 / 3.0);
    }

    #[test]
    fn json_records() {
        let text = sample().render(OutputFormat::Json).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed[1]["site"], 1);
        assert_eq!(parsed[0]["value"], 0.1);
    }

    #[test]
    fn manifest_path() {
        let p = Manifest::path_for(Path::new("/tmp/out/grid.csv"));
        assert_eq!(p, PathBuf::from("/tmp/out/grid.manifest.json"));
    }
}
