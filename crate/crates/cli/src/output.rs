// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::config::{Format, Resolved};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Column-major-named, row-ordered numeric table.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Header block shared by both formats.
pub fn header(cfg: &Resolved) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# cqed-lab {VERSION}");
    let _ = writeln!(s, "# scenario: {}", cfg.scenario.name);
    let _ = writeln!(s, "# frequency_unit: {:?}", cfg.frequency_unit);
    for (k, v) in cfg.echo() {
        let _ = writeln!(s, "# param: {k}={v}");
    }
    s
}

/// Shortest decimal that parses back to the same `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

pub fn to_csv(cfg: &Resolved, table: &Table) -> String {
    let mut s = header(cfg);
    s.push_str(&table.columns.join(","));
    s.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|&x| fmt_f64(x)).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    tool: &'static str,
    version: &'static str,
    scenario: &'static str,
    frequency_unit: f64,
    parameters: BTreeMap<String, String>,
    columns: &'a [String],
    /// Non-finite entries become `null`.
    rows: Vec<Vec<Option<f64>>>,
}

pub fn to_json(cfg: &Resolved, table: &Table) -> String {
    let doc = JsonDoc {
        tool: "cqed-lab",
        version: VERSION,
        scenario: cfg.scenario.name,
        frequency_unit: cfg.frequency_unit,
        parameters: cfg.echo().into_iter().collect(),
        columns: &table.columns,
        rows: table.rows.iter().map(|r| r.iter().map(|&x| x.is_finite().then_some(x)).collect()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}

pub fn render(cfg: &Resolved, table: &Table, format: Format) -> String {
    match format {
        Format::Csv => to_csv(cfg, table),
        Format::Json => to_json(cfg, table),
    }
}

/// Parses the body of a CSV produced by [`to_csv`]: header comments are
/// skipped and the first remaining line names the columns.
pub fn parse_csv(text: &str) -> Result<Table, String> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let columns: Vec<String> = lines.next().ok_or("missing column line")?.split(',').map(String::from).collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let row: Result<Vec<f64>, _> = line.split(',').map(str::parse::<f64>).collect();
        let row = row.map_err(|e| format!("row {i}: {e}"))?;
        if row.len() != columns.len() {
            return Err(format!("row {i} has {} cells, expected {}", row.len(), columns.len()));
        }
        rows.push(row);
    }
    Ok(Table { columns, rows })
}
