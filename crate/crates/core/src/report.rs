//! Tabular output shared by the command-line front end.
//!
//! CSV files follow RFC 4180 with leading `#` comment lines carrying the
//! schema version and the resolved configuration, one header row, the data
//! rows, and trailing `#footer` records. Floats are written with 17
//! significant digits. JSON output is a single object with `config`, `rows`
//! and `footer` keys.

use std::io::Write;

use serde_json::{Map, Value};

use crate::error::Result;
use crate::observables::ObservableRecord;
use crate::symmetry::Trajectory;
use crate::wavefunction::WaveSample;

pub const SCHEMA_VERSION: u32 = 1;

/// Marker in the first field of CSV footer records.
pub const FOOTER_TAG: &str = "#footer";

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    pub fn to_csv(&self) -> String {
        match self {
            Cell::Float(v) => format_float(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            // same 17 significant digits as the CSV cells
            Cell::Float(v) if v.is_finite() => {
                Value::Number(format_float(*v).parse().expect("finite float literal"))
            }
            Cell::Float(_) => Value::Null,
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Panics if the row width differs from the header.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    fn json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .cloned()
                        .zip(row.iter().map(Cell::to_json))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

impl From<&Trajectory> for Table {
    fn from(traj: &Trajectory) -> Self {
        let mut table = Table::new(ObservableRecord::COLUMNS);
        for r in traj.records() {
            table.push(r.values().into_iter().map(Cell::Float).collect());
        }
        table
    }
}

impl From<&[WaveSample]> for Table {
    fn from(samples: &[WaveSample]) -> Self {
        let mut table = Table::new(WaveSample::COLUMNS);
        for s in samples {
            table.push(s.values().into_iter().map(Cell::Float).collect());
        }
        table
    }
}

/// A command's complete output: configuration echo, data rows and footer.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub config: Vec<(String, Cell)>,
    pub rows: Table,
    pub footer: Table,
}

impl Report {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut out = out;
        writeln!(
            out,
            "# qho-coherent {} schema={}",
            self.command, SCHEMA_VERSION
        )?;
        for (key, value) in &self.config {
            writeln!(out, "# {key}={}", value.to_csv())?;
        }
        let mut writer = csv::WriterBuilder::new().flexible(true).from_writer(out);
        write_table_csv(&mut writer, &self.rows, None)?;
        if !self.footer.columns.is_empty() {
            write_table_csv(&mut writer, &self.footer, Some(FOOTER_TAG))?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut config = Map::new();
        config.insert("command".into(), Value::from(self.command.as_str()));
        config.insert("schema".into(), Value::from(SCHEMA_VERSION));
        for (key, value) in &self.config {
            config.insert(key.clone(), value.to_json());
        }
        let mut top = Map::new();
        top.insert("config".into(), Value::Object(config));
        top.insert("rows".into(), self.rows.json_rows());
        top.insert("footer".into(), self.footer.json_rows());
        Value::Object(top)
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        writeln!(out)?;
        Ok(())
    }
}

fn write_table_csv<W: Write>(
    writer: &mut csv::Writer<W>,
    table: &Table,
    tag: Option<&str>,
) -> Result<()> {
    let prefixed = |fields: Vec<String>| -> Vec<String> {
        match tag {
            Some(t) => std::iter::once(t.to_owned()).chain(fields).collect(),
            None => fields,
        }
    };
    writer.write_record(prefixed(table.columns.clone()))?;
    for row in &table.rows {
        writer.write_record(prefixed(row.iter().map(Cell::to_csv).collect()))?;
    }
    Ok(())
}

/// Trajectory as CSV: header row of field names, one record per sample.
pub fn write_trajectory_csv<W: Write>(traj: &Trajectory, out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    write_table_csv(&mut writer, &Table::from(traj), None)?;
    writer.flush()?;
    Ok(())
}

/// Wave samples as CSV columns x, re, im, abs2.
pub fn write_wave_samples_csv<W: Write>(samples: &[WaveSample], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    write_table_csv(&mut writer, &Table::from(samples), None)?;
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::CoherentLabel;
    use crate::params::OscillatorParams;

    fn sample_report() -> Report {
        let mut rows = Table::new(["n", "value", "label"]);
        rows.push(vec![Cell::from(0usize), Cell::from(0.1), Cell::from("a,b")]);
        let mut footer = Table::new(["tail"]);
        footer.push(vec![Cell::from(1e-13)]);
        Report {
            command: "demo".into(),
            config: vec![("n_max".into(), Cell::from(4usize))],
            rows,
            footer,
        }
    }

    #[test]
    fn float_cells_round_trip() {
        for v in [
            0.1,
            std::f64::consts::PI,
            -1e-300,
            6.02214076e23,
            2f64.sqrt(),
        ] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
            let digits: String = s
                .split('e')
                .next()
                .unwrap()
                .chars()
                .filter(|c| c.is_ascii_digit())
                .collect();
            assert_eq!(digits.len(), 17);
        }
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        sample_report().write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# qho-coherent demo schema=1");
        assert_eq!(lines[1], "# n_max=4");
        assert_eq!(lines[2], "n,value,label");
        assert_eq!(lines[3], "0,1.0000000000000001e-1,\"a,b\"");
        assert_eq!(lines[4], "#footer,tail");
        assert_eq!(lines[5], "#footer,1.0000000000000000e-13");
    }

    #[test]
    fn json_layout() {
        let v = sample_report().to_json();
        assert_eq!(v["config"]["n_max"], 4);
        assert_eq!(v["config"]["command"], "demo");
        assert_eq!(v["rows"][0]["label"], "a,b");
        assert_eq!(v["footer"][0]["tail"], 1e-13);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["config", "rows", "footer"]);
    }

    #[test]
    fn trajectory_and_samples_headers() {
        let params = OscillatorParams::natural();
        let traj =
            Trajectory::closed_form(CoherentLabel::new(1.0, 0.0), &params, 0.0, 0.5, 3).unwrap();
        let mut buf = Vec::new();
        write_trajectory_csv(&traj, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            ObservableRecord::COLUMNS.join(",")
        );
        assert_eq!(text.lines().count(), 4);

        let samples = [WaveSample {
            x: 0.0,
            value: num_complex::Complex64::new(0.6, 0.8),
        }];
        let mut buf = Vec::new();
        write_wave_samples_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("x,re,im,abs2\n"));
    }
}
