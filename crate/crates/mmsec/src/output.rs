//! CSV result files.
//!
//! A file opens with `#` comment lines (tool version, configuration digest,
//! seed, symbol count, skipped grid points) followed by a header row and one
//! row per grid point. Floats use the shortest representation that parses
//! back to the same `f64`; a missing theoretical value is an empty cell.

use std::io::{self, Write};
use std::path::Path;

use mmsec_core::simulator::SweepRow;
use thiserror::Error;

use crate::config::{split_name, RunConfig, SweepKind};

pub const SWEEP_COLUMNS: [&str; 4] = ["r_theory_bits", "r_empirical_bits", "beta_mean_emp", "beta_var_emp"];

#[derive(Debug, Error)]
pub enum OutputError {
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("bad value {value:?} in column {column}")]
    Value { column: String, value: String },
}

/// Table ready to be written.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
    pub notes: Vec<String>,
}

impl ResultTable {
    pub fn from_sweep(kind: SweepKind, rows: &[SweepRow]) -> Self {
        let x = if kind == SweepKind::SubsetSize { "m" } else { "x_deg" };
        let mut header = vec![x.to_owned()];
        header.extend(SWEEP_COLUMNS.iter().map(|s| s.to_string()));
        let rows = rows
            .iter()
            .map(|r| {
                vec![
                    Some(r.x),
                    r.r_theory_bits,
                    Some(r.r_empirical_bits),
                    Some(r.beta_mean_emp),
                    Some(r.beta_var_emp),
                ]
            })
            .collect();
        Self {
            header,
            rows,
            notes: Vec::new(),
        }
    }

    pub fn from_profile(profile: &[(f64, f64)]) -> Self {
        Self {
            header: vec!["x_deg".into(), "beam_var_emp".into()],
            rows: profile.iter().map(|&(x, v)| vec![Some(x), Some(v)]).collect(),
            notes: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let i = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }
}

/// Shortest round-tripping text for `v`: plain decimal for moderate
/// magnitudes, scientific otherwise.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e15).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn preamble(config: &RunConfig) -> Vec<String> {
    vec![
        format!("mmsec {}", env!("CARGO_PKG_VERSION")),
        format!("config_sha256={}", config.digest()),
        format!(
            "kind={} scheme={} split={} m={}",
            config.sweep.kind.name(),
            config.scheme.name(),
            split_name(config.split),
            config.m
        ),
        format!("seed={}", config.seed),
        format!("symbols={}", config.symbols),
    ]
}

/// Serialises `table` with the run preamble.
pub fn write_table<W: Write>(out: W, config: &RunConfig, table: &ResultTable) -> Result<(), OutputError> {
    let mut out = io::BufWriter::new(out);
    for line in preamble(config).iter().chain(&table.notes) {
        writeln!(out, "# {line}")?;
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|c| c.map(format_float).unwrap_or_default()))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes to `path` through a temporary file in the same directory, so a
/// reader never sees a partial result.
pub fn write_table_atomic(path: &Path, config: &RunConfig, table: &ResultTable) -> Result<(), OutputError> {
    let wrap = |source: io::Error| OutputError::Write {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(wrap)?;
    write_table(tmp.as_file_mut(), config, table)?;
    tmp.as_file().sync_all().map_err(wrap)?;
    tmp.persist(path).map_err(|e| wrap(e.error))?;
    Ok(())
}

/// Parses a file written by [`write_table`]; comment lines become notes.
pub fn read_table(text: &str) -> Result<ResultTable, OutputError> {
    let notes = text
        .lines()
        .filter_map(|l| l.strip_prefix("# "))
        .map(str::to_owned)
        .collect();
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record?;
        let row = record
            .iter()
            .zip(&header)
            .map(|(cell, column)| {
                if cell.is_empty() {
                    Ok(None)
                } else {
                    cell.parse::<f64>().map(Some).map_err(|_| OutputError::Value {
                        column: column.clone(),
                        value: cell.to_owned(),
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(ResultTable { header, rows, notes })
}

/// Drops the comment preamble, leaving header and data rows.
pub fn body(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats() {
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(95.5), "95.5");
        assert_eq!(format_float(1.7590483271239196e-10), "1.7590483271239196e-10");
        assert_eq!(format_float(-0.25), "-0.25");
    }

    proptest! {
        #[test]
        fn floats_round_trip(v in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            prop_assert_eq!(format_float(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
        }
    }
}
