// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use cqed_core::dynamics::PulseEnvelope;
use cqed_core::lambda3::{
    cd_amplitude_exact, eit_chi1, eit_numeric_point, eit_poles, run_protocol, LambdaDecays, ProbeControlSpec,
    StirapConfig,
};

use super::{check_rates, Ctx, ParamDefault::*, ScenarioDef};
use crate::config::{Axis, Resolved};
use crate::error::CliError;
use crate::output::Table;

fn decays(c: &Resolved) -> LambdaDecays {
    LambdaDecays { gamma31: c.num("gamma31"), gamma32: c.num("gamma32"), gamma21: c.num("gamma21") }
}

pub const EIT: ScenarioDef = ScenarioDef {
    name: "eit",
    params: &[
        ("delta2", Num(0.0)),
        ("gamma21", Num(0.0)),
        ("gamma31", Num(1.0)),
        ("gamma32", Num(0.0)),
        ("omega_c", Num(0.2)),
        ("omega_p", Num(0.01)),
    ],
    axes: &["delta"],
    cross_check: true,
    default_axis: |_, c| {
        let g = decays(c).gamma_total();
        Axis::new(-5.0 * g, 5.0 * g, 401)
    },
    check: check_eit,
    run: run_eit,
};

fn check_eit(c: &Resolved) -> Result<Vec<String>, CliError> {
    check_rates(c)?;
    let d = decays(c);
    let mut w = Vec::new();
    let limit = d.gamma_total() / 50.0;
    if c.num("omega_p") > limit {
        w.push(format!(
            "weak-probe bound violated: omega_p = {:?} > Gamma31/50 = {limit:?}; the numeric cross-check will be refused",
            c.num("omega_p")
        ));
    }
    if c.num("delta2") != 0.0 {
        w.push("delta2 != 0: the closed-form line shape differs from the weak-probe master-equation response".into());
    }
    Ok(w)
}

fn run_eit(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let d = decays(c);
    let spec = ProbeControlSpec { omega_p: c.num("omega_p"), omega_c: c.num("omega_c"), delta1: 0.0, delta2: c.num("delta2") };
    let poles = eit_poles(spec.omega_c, &d);
    let z = |p: num_complex::Complex<f64>| format!("{:?}{:+?}i", p.re, p.im);
    ctx.note(format!(
        "regime {} (threshold Omega_c = {:?}); poles {}, {}",
        poles.regime.as_str(),
        poles.threshold,
        z(poles.delta_plus),
        z(poles.delta_minus)
    ));
    let grid = c.axis("delta");
    let rows = ctx.par_map(&grid, |&x| {
        let s = spec.at_two_photon(x);
        let chi = eit_chi1(&s, &d);
        let mut row = vec![x, chi.re, chi.im];
        if ctx.cross_check {
            let n = eit_numeric_point(&s, &d)?.chi;
            row.extend([n.re, n.im, (n - chi).norm()]);
        }
        Ok(row)
    })?;
    let mut cols = vec!["delta", "chi_re", "chi_im"];
    if ctx.cross_check {
        cols.extend(["chi_re_numeric", "chi_im_numeric", "residual"]);
    }
    Ok(Table { columns: cols.iter().map(|s| s.to_string()).collect(), rows })
}

pub const STIRAP: ScenarioDef = ScenarioDef {
    name: "stirap",
    params: &[
        ("cd", Bool(false)),
        ("gamma21", Num(0.0)),
        ("gamma31", Num(0.0)),
        ("gamma32", Num(0.0)),
        ("omega_p_peak", Num(15.0)),
        ("omega_s_peak", Num(15.0)),
        ("sigma", Num(1.0)),
        ("t_s", Num(-1.5)),
    ],
    axes: &["t"],
    cross_check: false,
    default_axis: |_, c| {
        let (a, b) = StirapConfig::default_span(c.num("sigma"), c.num("t_s"));
        Axis::new(a, b, 201)
    },
    check: |c| {
        check_rates(c)?;
        stirap_config(c).validate()?;
        Ok(Vec::new())
    },
    run: run_stirap,
};

fn stirap_config(c: &Resolved) -> StirapConfig {
    let axis = c.grid["t"];
    StirapConfig {
        omega_p_peak: c.num("omega_p_peak"),
        omega_s_peak: c.num("omega_s_peak"),
        sigma: c.num("sigma"),
        t_s: c.num("t_s"),
        t_span: (axis.start, axis.stop),
        cd_enabled: c.flag("cd"),
    }
}

fn run_stirap(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let cfg = stirap_config(c);
    let d = decays(c);
    let open = d.gamma31 > 0.0 || d.gamma32 > 0.0 || d.gamma21 > 0.0;
    let run = run_protocol(&cfg, open.then_some(&d), c.grid["t"].count)?;
    let pump = PulseEnvelope::gaussian(cfg.omega_p_peak, 0.0, cfg.sigma)?;
    let stokes = PulseEnvelope::gaussian(cfg.omega_s_peak, cfg.t_s, cfg.sigma)?;
    let obs = &run.trajectory.observables;
    let mut t = Table::new(&["t", "p1", "p2", "p3", "omega_p", "omega_s", "omega_a"]);
    for (k, &ti) in run.trajectory.times.iter().enumerate() {
        let oa = if cfg.cd_enabled { cd_amplitude_exact(ti, &cfg)? } else { 0.0 };
        t.push(vec![ti, obs["P1"][k], obs["P2"][k], obs["P3"][k], pump.shape(ti), stokes.shape(ti), oa]);
    }
    Ok(t)
}
