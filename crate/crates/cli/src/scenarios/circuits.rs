// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use cqed_core::circuits::{
    cpb_bands, cpb_hamiltonian, flux_potential, lc_quantize, phase_potential, phase_potential_curvature,
    phase_potential_slope, tline_modes, transmon_effective, CpbParams, FluxQubitParams, PhaseQubitParams,
    TransmissionLineSpec,
};
use cqed_core::opalg::eig_hermitian;

use super::{no_axis, no_warnings, Ctx, ParamDefault::*, ScenarioDef};
use crate::config::{Axis, Resolved};
use crate::error::CliError;
use crate::output::Table;

pub const LC: ScenarioDef = ScenarioDef {
    name: "lc",
    params: &[("l", Num(1e-9)), ("c", Num(1e-12))],
    axes: &[],
    cross_check: false,
    default_axis: no_axis,
    check: no_warnings,
    run: run_lc,
};

fn run_lc(ctx: &Ctx) -> Result<Table, CliError> {
    let o = lc_quantize(ctx.cfg.num("l"), ctx.cfg.num("c"))?;
    let mut t = Table::new(&["l", "c", "omega", "z", "z_reduced", "q_zpf", "phi_zpf"]);
    t.push(vec![o.l, o.c, o.omega / ctx.cfg.frequency_unit, o.z, o.z_reduced, o.q_zpf, o.phi_zpf]);
    Ok(t)
}

pub const TLINE: ScenarioDef = ScenarioDef {
    name: "tline",
    params: &[("ell", Num(4.2e-7)), ("cap", Num(1.6e-10)), ("length", Num(0.01)), ("n_max", Int(5))],
    axes: &["x"],
    cross_check: false,
    default_axis: |_, cfg| Axis::new(0.0, cfg.num("length"), 101),
    check: no_warnings,
    run: run_tline,
};

fn run_tline(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let spec = TransmissionLineSpec { ell: c.num("ell"), cap: c.num("cap"), length: c.num("length"), n_max: c.int("n_max") };
    let x = c.axis("x");
    let mut t = Table::new(&["n", "k", "omega", "x", "phi"]);
    for m in tline_modes(&spec, &x)? {
        for (xi, p) in x.iter().zip(&m.phi) {
            t.push(vec![m.n as f64, m.k, m.omega / c.frequency_unit, *xi, *p]);
        }
    }
    Ok(t)
}

pub const CPB_BANDS: ScenarioDef = ScenarioDef {
    name: "cpb-bands",
    params: &[("ec", Num(1.0)), ("ej_over_ec", List(&[1.0, 10.0, 50.0])), ("nmax", Int(10)), ("n_levels", Int(3))],
    axes: &["ng"],
    cross_check: false,
    default_axis: |_, _| Axis::new(0.0, 1.0, 201),
    check: no_warnings,
    run: run_cpb_bands,
};

fn run_cpb_bands(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let (ec, nmax, n_levels) = (c.num("ec"), c.int("nmax"), c.int("n_levels"));
    let ng = c.axis("ng");
    let ratios = c.list("ej_over_ec");
    let tables = ctx.par_map(&ratios, |&r| Ok(cpb_bands(&CpbParams { ec, ej: r * ec, ng: 0.0, nmax }, &ng, n_levels)?))?;
    let mut cols = vec!["ej_over_ec".to_string(), "ng".to_string()];
    cols.extend((0..n_levels).map(|k| format!("e{k}")));
    let mut t = Table { columns: cols, rows: Vec::new() };
    for (r, bands) in ratios.iter().zip(&tables) {
        if bands.cutoff_warning() {
            ctx.warn(format!(
                "charge cutoff nmax={nmax} is too small at EJ/EC={r:?}: band {} keeps weight {:e} on |N|=nmax",
                n_levels - 1,
                bands.cutoff_population
            ));
        }
        for (g, e) in bands.ng.iter().zip(&bands.energies) {
            let mut row = vec![*r, *g];
            row.extend(e);
            t.push(row);
        }
    }
    Ok(t)
}

pub const TRANSMON: ScenarioDef = ScenarioDef {
    name: "transmon",
    params: &[("ec", Num(1.0)), ("ej", Num(50.0)), ("n_trunc", Int(5)), ("nmax", Int(20)), ("ng", Num(0.0))],
    axes: &[],
    cross_check: false,
    default_axis: no_axis,
    check: |cfg| {
        let ratio = cfg.num("ej") / cfg.num("ec");
        Ok(if ratio < 10.0 {
            vec![format!("EJ/EC = {ratio:?} < 10: the Duffing reduction is only indicative")]
        } else {
            Vec::new()
        })
    },
    run: run_transmon,
};

fn run_transmon(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let (ec, ej, n) = (c.num("ec"), c.num("ej"), c.int("n_trunc"));
    let (_, h) = transmon_effective(ec, ej, n)?;
    let exact = eig_hermitian(&cpb_hamiltonian(&CpbParams { ec, ej, ng: c.num("ng"), nmax: c.int("nmax") })?)?.values;
    let mut t = Table::new(&["level", "duffing", "charge_basis", "difference"]);
    for k in 0..n.min(exact.len()) {
        let duffing = h[(k, k)].re;
        let e = exact[k] - exact[0];
        t.push(vec![k as f64, duffing, e, duffing - e]);
    }
    Ok(t)
}

pub const FLUX: ScenarioDef = ScenarioDef {
    name: "flux",
    params: &[("alpha", Num(0.8)), ("k", Num(0.5))],
    axes: &["phi_minus", "phi_plus"],
    cross_check: false,
    default_axis: |_, _| Axis::new(-PI, PI, 61),
    check: |cfg| {
        let a = cfg.num("alpha");
        Ok(if flux_params(cfg).alpha_typical() {
            Vec::new()
        } else {
            vec![format!("alpha = {a:?} is outside the typical range [0.5, 1]")]
        })
    },
    run: run_flux,
};

fn flux_params(c: &Resolved) -> FluxQubitParams {
    FluxQubitParams { alpha: c.num("alpha"), gamma_cap: 0.0, k: c.num("k"), ej: 1.0, ip: 0.0, tunnel_delta: 0.0 }
}

fn run_flux(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let p = flux_params(c);
    let mut t = Table::new(&["phi_plus", "phi_minus", "u_over_ej"]);
    for pp in c.axis("phi_plus") {
        for pm in c.axis("phi_minus") {
            t.push(vec![pp, pm, flux_potential(&p, pp, pm)]);
        }
    }
    Ok(t)
}

pub const PHASE: ScenarioDef = ScenarioDef {
    name: "phase",
    params: &[("beta_l", Num(4.0)), ("flux_bias", Num(0.7))],
    axes: &["phi"],
    cross_check: false,
    default_axis: |_, _| Axis::new(-2.0 * PI, 4.0 * PI, 601),
    check: |cfg| {
        let b = cfg.num("beta_l");
        if !(b > 0.0) {
            return Err(CliError::config(format!("beta_l must be > 0, got {b:?}")));
        }
        Ok(if phase_params(cfg).in_operating_range() { Vec::new() } else { vec![format!("beta_l = {b:?} is outside the operating range (1, 4.6)")] })
    },
    run: run_phase,
};

fn phase_params(c: &Resolved) -> PhaseQubitParams {
    PhaseQubitParams {
        beta_l: c.num("beta_l"),
        flux_bias: c.num("flux_bias"),
        ej: 1.0,
        omega01: 1.0,
        barrier_du: 1.0,
        cap: 1.0,
        di_circ: 0.0,
    }
}

fn run_phase(ctx: &Ctx) -> Result<Table, CliError> {
    let p = phase_params(ctx.cfg);
    let mut t = Table::new(&["phi", "u_over_ej", "slope", "curvature"]);
    for phi in ctx.cfg.axis("phi") {
        t.push(vec![phi, phase_potential(&p, phi), phase_potential_slope(&p, phi), phase_potential_curvature(&p, phi)]);
    }
    Ok(t)
}
