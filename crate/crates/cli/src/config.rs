// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Scenario configuration: one JSON document per run, plus command-line
//! `--key value` overrides.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;
use serde_json::Value as Json;

use crate::error::CliError;
use crate::scenarios::{ParamDefault, ScenarioDef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format '{s}' (expected csv or json)")),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub path: Option<String>,
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(start: f64, stop: f64, count: usize) -> Self {
        Self { start, stop, count }
    }

    pub fn validate(&self, name: &str) -> Result<(), CliError> {
        if self.count < 2 {
            return Err(CliError::config(format!("grid axis '{name}' needs count >= 2, got {}", self.count)));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(CliError::config(format!("grid axis '{name}' has non-finite bounds")));
        }
        Ok(())
    }

    /// Equally spaced points; the end points are reproduced exactly.
    pub fn values(&self) -> Vec<f64> {
        let n = self.count - 1;
        (0..=n)
            .map(|i| {
                if i == n {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * (i as f64 / n as f64)
                }
            })
            .collect()
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{:?}:{}", self.start, self.stop, self.count)
    }
}

/// A resolved parameter value.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Num(f64),
    Int(usize),
    Bool(bool),
    List(Vec<f64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(x) => write!(f, "{x:?}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::List(v) => {
                let items: Vec<String> = v.iter().map(|x| format!("{x:?}")).collect();
                write!(f, "[{}]", items.join(","))
            }
        }
    }
}

/// The document as written.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub scenario: Option<String>,
    pub frequency_unit: Option<f64>,
    #[serde(default)]
    pub parameters: BTreeMap<String, Json>,
    #[serde(default)]
    pub grid: BTreeMap<String, Axis>,
    pub output: Option<OutputSpec>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::config(format!("config parse error at line {}, column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn read(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read config '{path}': {e}")))?;
        Self::parse(&text)
    }
}

/// Parameters and grid after defaults and overrides.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub scenario: &'static ScenarioDef,
    pub frequency_unit: f64,
    pub params: BTreeMap<String, Value>,
    pub grid: BTreeMap<String, Axis>,
}

impl Resolved {
    pub fn num(&self, key: &str) -> f64 {
        match &self.params[key] {
            Value::Num(x) => *x,
            Value::Int(n) => *n as f64,
            other => panic!("parameter '{key}' is not numeric: {other}"),
        }
    }

    pub fn int(&self, key: &str) -> usize {
        match &self.params[key] {
            Value::Int(n) => *n,
            other => panic!("parameter '{key}' is not an integer: {other}"),
        }
    }

    pub fn flag(&self, key: &str) -> bool {
        match &self.params[key] {
            Value::Bool(b) => *b,
            other => panic!("parameter '{key}' is not a flag: {other}"),
        }
    }

    pub fn list(&self, key: &str) -> Vec<f64> {
        match &self.params[key] {
            Value::List(v) => v.clone(),
            Value::Num(x) => vec![*x],
            other => panic!("parameter '{key}' is not a list: {other}"),
        }
    }

    pub fn axis(&self, key: &str) -> Vec<f64> {
        self.grid[key].values()
    }

    /// Header echo: every parameter plus the grid, in sorted key order.
    pub fn echo(&self) -> Vec<(String, String)> {
        let mut out: BTreeMap<String, String> = self.params.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
        for (k, a) in &self.grid {
            out.insert(format!("grid.{k}"), a.to_string());
        }
        out.into_iter().collect()
    }
}

fn convert(key: &str, kind: &ParamDefault, raw: &Json) -> Result<Value, CliError> {
    let bad = |want: &str| CliError::config(format!("parameter '{key}' must be {want}, got {raw}"));
    match kind {
        ParamDefault::Num(_) => raw.as_f64().filter(|x| x.is_finite()).map(Value::Num).ok_or_else(|| bad("a finite number")),
        ParamDefault::Int(_) => raw
            .as_u64()
            .or_else(|| raw.as_f64().filter(|x| x.fract() == 0.0 && *x >= 0.0).map(|x| x as u64))
            .map(|n| Value::Int(n as usize))
            .ok_or_else(|| bad("a non-negative integer")),
        ParamDefault::Bool(_) => raw.as_bool().map(Value::Bool).ok_or_else(|| bad("true or false")),
        ParamDefault::List(_) => match raw {
            Json::Array(items) => items
                .iter()
                .map(|x| x.as_f64().filter(|x| x.is_finite()).ok_or_else(|| bad("a list of finite numbers")))
                .collect::<Result<Vec<f64>, _>>()
                .and_then(|v| if v.is_empty() { Err(bad("a non-empty list")) } else { Ok(Value::List(v)) }),
            Json::Number(_) => Ok(Value::List(vec![raw.as_f64().unwrap()])),
            _ => Err(bad("a list of numbers")),
        },
    }
}

/// Parses a command-line override value according to the parameter kind.
fn parse_override(key: &str, kind: &ParamDefault, text: Option<&str>) -> Result<Value, CliError> {
    match (kind, text) {
        (ParamDefault::Bool(_), None) => Ok(Value::Bool(true)),
        (_, None) => Err(CliError::config(format!("option --{} needs a value", key.replace('_', "-")))),
        (_, Some(t)) => {
            let json: Json = if let ParamDefault::List(_) = kind {
                if t.trim_start().starts_with('[') {
                    serde_json::from_str(t).map_err(|e| CliError::config(format!("bad list for '{key}': {e}")))?
                } else {
                    let items: Result<Vec<Json>, _> = t.split(',').map(|s| serde_json::from_str::<Json>(s.trim())).collect();
                    Json::Array(items.map_err(|e| CliError::config(format!("bad list for '{key}': {e}")))?)
                }
            } else {
                serde_json::from_str(t).map_err(|_| CliError::config(format!("bad value '{t}' for parameter '{key}'")))?
            };
            convert(key, kind, &json)
        }
    }
}

fn unknown_key(def: &ScenarioDef, key: &str) -> CliError {
    let accepted: Vec<&str> = def.params.iter().map(|(k, _)| *k).collect();
    CliError::config(format!(
        "unknown parameter '{key}' for scenario '{}'; accepted keys: {}",
        def.name,
        accepted.join(", ")
    ))
}

/// Splits `--key value` / `--flag` tokens.
pub fn split_overrides(def: &ScenarioDef, tokens: &[String]) -> Result<Vec<(String, Value)>, CliError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let tok = &tokens[i];
        let Some(name) = tok.strip_prefix("--") else {
            return Err(CliError::config(format!("unexpected argument '{tok}'")));
        };
        let (name, inline) = match name.split_once('=') {
            Some((n, v)) => (n, Some(v.to_string())),
            None => (name, None),
        };
        let key = name.replace('-', "_");
        let kind = def.param(&key).ok_or_else(|| unknown_key(def, &key))?;
        let value = match (kind, inline) {
            (_, Some(v)) => parse_override(&key, kind, Some(&v))?,
            (ParamDefault::Bool(_), None) => {
                let next = tokens.get(i + 1).map(String::as_str);
                if matches!(next, Some("true") | Some("false")) {
                    i += 1;
                    parse_override(&key, kind, next)?
                } else {
                    Value::Bool(true)
                }
            }
            (_, None) => {
                i += 1;
                parse_override(&key, kind, tokens.get(i).map(String::as_str))?
            }
        };
        out.push((key, value));
        i += 1;
    }
    Ok(out)
}

/// Merges defaults, the config document and overrides, then checks types,
/// grid axes and the unit.
pub fn resolve(def: &'static ScenarioDef, raw: &RawConfig, overrides: &[(String, Value)]) -> Result<Resolved, CliError> {
    if let Some(name) = &raw.scenario {
        if name != def.name {
            return Err(CliError::config(format!("config is for scenario '{name}', not '{}'", def.name)));
        }
    }
    let unit = raw.frequency_unit.unwrap_or(1.0);
    if !(unit > 0.0 && unit.is_finite()) {
        return Err(CliError::config(format!("frequency_unit must be finite and > 0, got {unit}")));
    }
    let mut params: BTreeMap<String, Value> = def.params.iter().map(|(k, d)| (k.to_string(), d.value())).collect();
    for (key, json) in &raw.parameters {
        let kind = def.param(key).ok_or_else(|| unknown_key(def, key))?;
        params.insert(key.clone(), convert(key, kind, json)?);
    }
    for (key, v) in overrides {
        params.insert(key.clone(), v.clone());
    }
    let mut grid = BTreeMap::new();
    for key in raw.grid.keys() {
        if !def.axes.contains(&key.as_str()) {
            return Err(CliError::config(format!(
                "unknown grid axis '{key}' for scenario '{}'; accepted axes: {}",
                def.name,
                if def.axes.is_empty() { "(none)".to_string() } else { def.axes.join(", ") }
            )));
        }
    }
    let mut resolved = Resolved { scenario: def, frequency_unit: unit, params, grid: BTreeMap::new() };
    for &axis in def.axes {
        let a = match raw.grid.get(axis) {
            Some(a) => *a,
            None => (def.default_axis)(axis, &resolved),
        };
        a.validate(axis)?;
        grid.insert(axis.to_string(), a);
    }
    resolved.grid = grid;
    Ok(resolved)
}
