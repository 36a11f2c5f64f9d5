// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use cqed_core::jcm::{
    jc_doublet, jc_hamiltonian, polariton_basis, polariton_cross_check, DriveSpec, JcmParams, DISPERSIVE_WARN,
};
use cqed_core::opalg::eig_hermitian;

use super::{Ctx, ParamDefault::*, ScenarioDef};
use crate::config::{Axis, Resolved};
use crate::error::CliError;
use crate::output::Table;

pub const JC_DRESSED: ScenarioDef = ScenarioDef {
    name: "jc-dressed",
    params: &[("g", Num(0.1)), ("n_cav", Int(20)), ("n_max", Int(5)), ("omega_r", Num(5.0))],
    axes: &["delta"],
    cross_check: true,
    default_axis: |_, c| Axis::new(-10.0 * c.num("g"), 10.0 * c.num("g"), 41),
    check: |c| {
        let (n_cav, n_max) = (c.int("n_cav"), c.int("n_max"));
        if n_cav < 3 || n_max + 2 > n_cav {
            return Err(CliError::config(format!("need n_cav >= 3 and n_max <= n_cav - 2, got n_cav = {n_cav}, n_max = {n_max}")));
        }
        Ok(Vec::new())
    },
    run: run_jc_dressed,
};

/// Numeric doublet energies: for manifold `n`, the two eigenvalues of the
/// truncated matrix whose eigenvectors weigh most on `{|e,n>, |g,n+1>}`.
fn numeric_doublets(p: &JcmParams, n_max: usize) -> Result<Vec<(f64, f64)>, CliError> {
    let es = eig_hermitian(&jc_hamiltonian(p)?)?;
    Ok((0..=n_max)
        .map(|n| {
            let (a, b) = (p.index(true, n), p.index(false, n + 1));
            let mut w: Vec<(f64, usize)> = (0..es.len())
                .map(|k| (es.vectors[(a, k)].norm_sqr() + es.vectors[(b, k)].norm_sqr(), k))
                .collect();
            w.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
            let (e1, e2) = (es.values[w[0].1], es.values[w[1].1]);
            (e1.min(e2), e1.max(e2))
        })
        .collect())
}

fn run_jc_dressed(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let (wr, g, n_max) = (c.num("omega_r"), c.num("g"), c.int("n_max"));
    let deltas = c.axis("delta");
    let blocks = ctx.par_map(&deltas, |&d| {
        let p = JcmParams { omega_r: wr, omega_q: wr + d, g, n_cav: c.int("n_cav") };
        p.validate()?;
        let numeric = if ctx.cross_check { Some(numeric_doublets(&p, n_max)?) } else { None };
        Ok((0..=n_max).map(|n| (n, jc_doublet(n, wr, d, g), numeric.as_ref().map(|v| v[n]))).collect::<Vec<_>>())
    })?;
    let mut cols = vec!["delta", "n", "e_minus", "e_plus", "theta", "rabi"];
    if ctx.cross_check {
        cols.extend(["e_minus_numeric", "e_plus_numeric", "residual"]);
    }
    let mut t = Table::new(&cols);
    for (d, rows) in deltas.iter().zip(blocks) {
        for (n, dbl, num) in rows {
            let mut row = vec![*d, n as f64, dbl.e_minus, dbl.e_plus, dbl.theta, dbl.rabi];
            if let Some((lo, hi)) = num {
                row.extend([lo, hi, (lo - dbl.e_minus).abs().max((hi - dbl.e_plus).abs())]);
            }
            t.push(row);
        }
    }
    Ok(t)
}

fn jcm(c: &Resolved) -> JcmParams {
    JcmParams { omega_r: c.num("omega_r"), omega_q: c.num("omega_q"), g: c.num("g"), n_cav: c.int("n_cav") }
}

pub const POLARITON: ScenarioDef = ScenarioDef {
    name: "polariton",
    params: &[("big_omega_d", Num(1e-4)), ("g", Num(0.05)), ("n_cav", Int(6)), ("omega_q", Num(5.0)), ("omega_r", Num(6.0))],
    axes: &["omega_d"],
    cross_check: true,
    default_axis: |_, c| {
        let p = jcm(c);
        Axis::new(p.omega_q - 4.0 * p.chi(), p.omega_q, 81)
    },
    check: check_polariton,
    run: run_polariton,
};

fn check_polariton(c: &Resolved) -> Result<Vec<String>, CliError> {
    let p = jcm(c);
    p.validate()?;
    let mut w = Vec::new();
    let ratio = p.dispersive_ratio();
    if ratio > DISPERSIVE_WARN {
        w.push(format!("dispersive approximation unreliable: g/|Delta| = {ratio:?} > {DISPERSIVE_WARN:?}"));
    }
    let (lo, hi) = (p.omega_q - 3.0 * p.chi(), p.omega_q - p.chi());
    let axis = c.grid["omega_d"];
    let (a, b) = (axis.start.min(axis.stop), axis.start.max(axis.stop));
    if !(lo < a && b < hi) {
        w.push(format!(
            "omega_d range [{a:?}, {b:?}] reaches outside the nesting window omega_q - 3 chi < omega_d < omega_q - chi = ({lo:?}, {hi:?})"
        ));
    }
    Ok(w)
}

fn run_polariton(ctx: &Ctx) -> Result<Table, CliError> {
    let c = ctx.cfg;
    let p = jcm(c);
    let od = c.num("big_omega_d");
    let grid = c.axis("omega_d");
    let rows = ctx.par_map(&grid, |&wd| {
        let d = DriveSpec { omega_d: wd, big_omega_d: od };
        let b = polariton_basis(&p, &d)?;
        let mut row = vec![wd, b.omega_21, b.omega_43, b.theta_l, b.theta_u, f64::from(u8::from(b.nested))];
        if ctx.cross_check {
            let x = polariton_cross_check(&p, &d)?;
            row.extend([x.omega_21, x.omega_43, x.deviation]);
        }
        Ok(row)
    })?;
    let mut cols = vec!["omega_d", "omega_21", "omega_43", "theta_l", "theta_u", "nested"];
    if ctx.cross_check {
        cols.extend(["omega_21_numeric", "omega_43_numeric", "deviation"]);
    }
    Ok(Table { columns: cols.iter().map(|s| s.to_string()).collect(), rows })
}
