// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Scenario table. Every scenario declares its parameters with defaults,
//! its grid axes, a pre-run check and the runner itself.

mod cavity;
mod circuits;
mod lambda;
mod optics;

use rayon::prelude::*;
use rayon::ThreadPool;

use crate::config::{Axis, Resolved, Value};
use crate::error::CliError;
use crate::output::Table;

#[derive(Clone, Copy, Debug)]
pub enum ParamDefault {
    Num(f64),
    Int(usize),
    Bool(bool),
    List(&'static [f64]),
}

impl ParamDefault {
    pub fn value(&self) -> Value {
        match *self {
            ParamDefault::Num(x) => Value::Num(x),
            ParamDefault::Int(n) => Value::Int(n),
            ParamDefault::Bool(b) => Value::Bool(b),
            ParamDefault::List(v) => Value::List(v.to_vec()),
        }
    }
}

pub struct ScenarioDef {
    pub name: &'static str,
    pub params: &'static [(&'static str, ParamDefault)],
    pub axes: &'static [&'static str],
    pub cross_check: bool,
    pub default_axis: fn(&str, &Resolved) -> Axis,
    /// Structural and physical checks that need no solver; returns warnings.
    pub check: fn(&Resolved) -> Result<Vec<String>, CliError>,
    pub run: fn(&Ctx) -> Result<Table, CliError>,
}

impl std::fmt::Debug for ScenarioDef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScenarioDef").field("name", &self.name).finish_non_exhaustive()
    }
}

impl ScenarioDef {
    pub fn param(&self, key: &str) -> Option<&ParamDefault> {
        self.params.iter().find(|(k, _)| *k == key).map(|(_, d)| d)
    }
}

/// Everything a runner sees.
pub struct Ctx<'a> {
    pub cfg: &'a Resolved,
    pub cross_check: bool,
    pub pool: &'a ThreadPool,
    pub warnings: std::sync::Mutex<Vec<String>>,
    pub notes: std::sync::Mutex<Vec<String>>,
}

impl Ctx<'_> {
    /// Maps `f` over `items` on the worker pool; results keep input order.
    pub fn par_map<I: Sync, T: Send>(
        &self,
        items: &[I],
        f: impl Fn(&I) -> Result<T, CliError> + Sync + Send,
    ) -> Result<Vec<T>, CliError> {
        self.pool.install(|| items.par_iter().map(&f).collect())
    }

    pub fn warn(&self, msg: impl Into<String>) {
        self.warnings.lock().expect("warning list").push(msg.into());
    }

    /// Informational message, printed after the run.
    pub fn note(&self, msg: impl Into<String>) {
        self.notes.lock().expect("note list").push(msg.into());
    }
}

pub static SCENARIOS: &[ScenarioDef] = &[
    circuits::LC,
    circuits::TLINE,
    circuits::CPB_BANDS,
    circuits::TRANSMON,
    circuits::FLUX,
    circuits::PHASE,
    optics::RABI,
    optics::SUSCEPTIBILITY,
    cavity::JC_DRESSED,
    cavity::POLARITON,
    lambda::EIT,
    lambda::STIRAP,
];

pub fn find(name: &str) -> Option<&'static ScenarioDef> {
    SCENARIOS.iter().find(|s| s.name == name)
}

pub fn names() -> Vec<&'static str> {
    SCENARIOS.iter().map(|s| s.name).collect()
}

/// Rejects negative or non-finite values for every `gamma*` key.
pub(crate) fn check_rates(cfg: &Resolved) -> Result<(), CliError> {
    for (k, v) in &cfg.params {
        if let (true, Value::Num(x)) = (k.starts_with("gamma"), v) {
            if !(*x >= 0.0) {
                return Err(CliError::config(format!("decay rate '{k}' must be >= 0, got {x:?}")));
            }
        }
    }
    Ok(())
}

fn no_axis(name: &str, _: &Resolved) -> Axis {
    unreachable!("scenario has no axis '{name}'")
}

fn no_warnings(cfg: &Resolved) -> Result<Vec<String>, CliError> {
    check_rates(cfg)?;
    Ok(Vec::new())
}
