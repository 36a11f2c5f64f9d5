// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use cqed_core::constants::CODATA;
use cqed_core::dynamics::{evolve, steady_state};
use cqed_core::twolevel::{dipole_from_decay, lindblad_model, rabi_population_gg, tls_susceptibility, TlsDriveParams};
use cqed_core::Operator;

use super::{check_rates, Ctx, ParamDefault::*, ScenarioDef};
use crate::config::{Axis, Resolved};
use crate::error::CliError;
use crate::output::Table;

fn tls(c: &Resolved, delta: f64) -> TlsDriveParams {
    TlsDriveParams { gamma: c.num("gamma"), delta, rabi_g: c.num("rabi_g"), density: 0.0, dipole: 0.0 }
}

pub const RABI: ScenarioDef = ScenarioDef {
    name: "rabi",
    params: &[("delta", Num(0.0)), ("gamma", Num(0.0)), ("rabi_g", Num(0.5))],
    axes: &["t"],
    cross_check: true,
    default_axis: |_, c| {
        let w = tls(c, c.num("delta")).generalized_rabi();
        let stop = if w > 0.0 { 10.0 * 2.0 * PI / w } else { 10.0 };
        Axis::new(0.0, stop, 501)
    },
    check: |c| {
        check_rates(c)?;
        Ok(Vec::new())
    },
    run: run_rabi,
};

fn run_rabi(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let p = tls(c, c.num("delta"));
    if ctx.cross_check && p.gamma != 0.0 {
        return Err(CliError::config("rabi --cross-check compares with the lossless closed form; set gamma = 0"));
    }
    let times = c.axis("t");
    let traj = evolve(&lindblad_model(&p)?, &Operator::projector(2, 0), &times)?;
    let mut cols = vec!["t", "rho_gg", "rho_ee"];
    if ctx.cross_check {
        cols.extend(["rho_gg_closed_form", "residual"]);
    }
    let mut t = Table::new(&cols);
    for (ti, rho) in times.iter().zip(&traj.states) {
        let gg = rho[(0, 0)].re;
        let mut row = vec![*ti, gg, rho[(1, 1)].re];
        if ctx.cross_check {
            let exact = rabi_population_gg(&p, *ti);
            row.extend([exact, gg - exact]);
        }
        t.push(row);
    }
    Ok(t)
}

pub const SUSCEPTIBILITY: ScenarioDef = ScenarioDef {
    name: "susceptibility",
    params: &[
        ("density", Num(1e18)),
        ("dipole", Num(0.0)),
        ("gamma", Num(1.0)),
        ("rabi_g", Num(0.5)),
        ("wavelength", Num(780e-9)),
    ],
    axes: &["delta"],
    cross_check: true,
    default_axis: |_, c| {
        let w = (c.num("gamma").powi(2) + 2.0 * c.num("rabi_g").powi(2)).sqrt().max(f64::MIN_POSITIVE);
        Axis::new(-10.0 * w, 10.0 * w, 401)
    },
    check: |c| {
        check_rates(c)?;
        if !(c.num("gamma") > 0.0) {
            return Err(CliError::config("susceptibility needs gamma > 0"));
        }
        for k in ["density", "dipole", "wavelength"] {
            if !(c.num(k) >= 0.0) {
                return Err(CliError::config(format!("'{k}' must be >= 0")));
            }
        }
        Ok(Vec::new())
    },
    run: run_susceptibility,
};

/// Physical parameters in SI units; a zero dipole is derived from the
/// decay rate at the given wavelength.
pub(crate) fn physical(c: &Resolved) -> TlsDriveParams {
    let unit = c.frequency_unit;
    let gamma = c.num("gamma") * unit;
    let dipole = match c.num("dipole") {
        d if d > 0.0 => d,
        _ => dipole_from_decay(gamma, 2.0 * PI * CODATA.c_light / c.num("wavelength")),
    };
    TlsDriveParams { gamma, delta: 0.0, rabi_g: c.num("rabi_g") * unit, density: c.num("density"), dipole }
}

fn run_susceptibility(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let p = physical(c);
    let unit = c.frequency_unit;
    let deltas = c.axis("delta");
    let si: Vec<f64> = deltas.iter().map(|d| d * unit).collect();
    let chi = tls_susceptibility(&p, &si)?;
    let numeric = if ctx.cross_check {
        if p.rabi_g == 0.0 {
            return Err(CliError::config("susceptibility --cross-check needs rabi_g > 0"));
        }
        // the master equation is solved in config units; only ratios enter
        let pre = p.chi_prefactor();
        Some(ctx.par_map(&deltas, |&d| {
            let rho = steady_state(&lindblad_model(&tls(c, d))?)?;
            Ok(rho[(1, 0)] * (pre / p.rabi_g))
        })?)
    } else {
        None
    };
    let mut cols = vec!["delta", "chi_re", "chi_im"];
    if numeric.is_some() {
        cols.extend(["chi_re_numeric", "chi_im_numeric", "residual"]);
    }
    let mut t = Table::new(&cols);
    for (k, (d, x)) in deltas.iter().zip(&chi).enumerate() {
        let mut row = vec![*d, x.re, x.im];
        if let Some(n) = &numeric {
            row.extend([n[k].re, n[k].im, (n[k] - x).norm()]);
        }
        t.push(row);
    }
    Ok(t)
}
