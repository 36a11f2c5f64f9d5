// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one PASS/FAIL line per criterion, with its runtime
//! budget. Oracles are closed forms written out here, not library calls.

use std::process::Command;
use std::time::{Duration, Instant};

use cqed_core::circuits::{cpb_bands, CpbParams};
use cqed_core::dynamics::{evolve, steady_state};
use cqed_core::jcm::{jc_doublet, jc_hamiltonian, polariton_basis, polariton_cross_check, DriveSpec, JcmParams};
use cqed_core::lambda3::{
    dark_state, eit_chi1, eit_numeric_point, eit_poles, run_protocol, stirap_hamiltonian, LambdaDecays,
    ProbeControlSpec, Regime, StirapConfig,
};
use cqed_core::opalg::eig_hermitian;
use cqed_core::twolevel::{dipole_from_decay, lindblad_model, tls_susceptibility, TlsDriveParams};
use cqed_core::{Operator, C64};
use cqed_lab::config::RawConfig;
use cqed_lab::scenarios::{find, names};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn tls(gamma: f64, delta: f64, g: f64) -> TlsDriveParams {
    TlsDriveParams { gamma, delta, rabi_g: g, density: 0.0, dipole: 0.0 }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| if i == n - 1 { b } else { a + (b - a) * i as f64 / (n - 1) as f64 }).collect()
}

fn rabi() -> Outcome {
    let g = 0.5;
    let omega = 2.0 * g;
    let times = linspace(0.0, 10.0 * 2.0 * std::f64::consts::PI / omega, 2001);
    let traj = evolve(&lindblad_model(&tls(0.0, 0.0, g)).map_err(|e| e.to_string())?, &Operator::projector(2, 0), &times)
        .map_err(|e| e.to_string())?;
    let err = times
        .iter()
        .zip(&traj.states)
        .map(|(t, rho)| (rho[(0, 0)].re - (omega * t / 2.0).cos().powi(2)).abs())
        .fold(0.0, f64::max);
    check(err <= 1e-6, format!("max |rho_gg - cos^2(Wt/2)| = {err:.2e} (limit 1e-6)"))
}

fn steady() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut worst_ss, mut worst_long) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let (gamma, delta, g) = (rng.gen_range(0.1..2.0), rng.gen_range(-3.0..3.0), rng.gen_range(0.0..2.0));
        let den = gamma * gamma + delta * delta + 2.0 * g * g;
        let ree = g * g / den;
        let reg = Complex::new(0.0, g) * Complex::new(gamma, delta) / den;
        let model = lindblad_model(&tls(gamma, delta, g)).map_err(|e| e.to_string())?;
        let rho = steady_state(&model).map_err(|e| e.to_string())?;
        worst_ss = worst_ss.max((rho[(1, 1)].re - ree).abs()).max((rho[(1, 0)] - reg).norm());
        let traj = evolve(&model, &Operator::projector(2, 0), &[0.0, 40.0 / gamma]).map_err(|e| e.to_string())?;
        worst_long = worst_long.max((traj.final_state() - &rho).max_abs());
    }
    check(
        worst_ss <= 1e-10 && worst_long <= 1e-6,
        format!("null space vs closed form {worst_ss:.2e} (limit 1e-10), vs long-time integration {worst_long:.2e} (limit 1e-6)"),
    )
}

fn fig4() -> Outcome {
    let gamma = 3.81e7;
    let lambda = 780e-9;
    let omega = 2.0 * std::f64::consts::PI * 299_792_458.0 / lambda;
    let p = TlsDriveParams {
        gamma,
        delta: 0.0,
        rabi_g: 0.5 * gamma,
        density: 1e18,
        dipole: dipole_from_decay(gamma, omega),
    };
    let grid = linspace(-10.0 * gamma, 10.0 * gamma, 20001);
    let chi = tls_susceptibility(&p, &grid).map_err(|e| e.to_string())?;
    let mid = grid.len() / 2;
    let im: Vec<f64> = chi.iter().map(|z| z.im).collect();
    let peak = im[mid];
    let single = (1..=mid).all(|k| im[mid - k] < im[mid - k + 1]) && (mid..grid.len() - 1).all(|k| im[k + 1] < im[k]);
    let even = (0..mid).all(|k| (im[k] - im[grid.len() - 1 - k]).abs() <= 1e-12 * peak);
    // half-maximum crossings by linear interpolation
    let cross = |range: Box<dyn Iterator<Item = usize>>| -> f64 {
        for k in range {
            let (a, b) = (im[k] - peak / 2.0, im[k + 1] - peak / 2.0);
            if a.signum() != b.signum() {
                return grid[k] + (grid[k + 1] - grid[k]) * a / (a - b);
            }
        }
        f64::NAN
    };
    let width = cross(Box::new(mid..grid.len() - 1)) - cross(Box::new(0..mid));
    let expected = 2.0 * (gamma * gamma + 2.0 * p.rabi_g * p.rabi_g).sqrt();
    let rel = (width / expected - 1.0).abs();
    let re0 = chi[mid].re;
    let slope_neg = chi[mid + 1].re < 0.0 && chi[mid - 1].re > 0.0;
    check(
        single && even && rel <= 5e-3 && re0.abs() <= 1e-12 * peak && slope_neg,
        format!(
            "FWHM {:.6e} vs 2 sqrt(gamma^2+2G^2) {:.6e} (rel {rel:.1e}, limit 5e-3); single even peak {}; Re chi(0) = {re0:.1e}, slope negative {slope_neg}",
            width,
            expected,
            single && even
        ),
    )
}

fn cpb() -> Outcome {
    let ng = linspace(0.0, 1.0, 201);
    let t = cpb_bands(&CpbParams { ec: 1.0, ej: 50.0, ng: 0.0, nmax: 20 }, &ng, 2).map_err(|e| e.to_string())?;
    let w01: Vec<f64> = t.energies.iter().map(|e| e[1] - e[0]).collect();
    let oracle = (8.0f64 * 50.0).sqrt() - 1.0;
    let (lo, hi) = w01.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    let rel_a = (w01[0] / oracle - 1.0).abs();
    let disp = (hi - lo) / w01[0];

    let ej = 1e-3;
    let half = cpb_bands(&CpbParams { ec: 1.0, ej, ng: 0.0, nmax: 10 }, &[0.5], 2).map_err(|e| e.to_string())?;
    let gap = half.energies[0][1] - half.energies[0][0];
    let rel_b = (gap / ej - 1.0).abs();

    let raw = RawConfig::parse(
        r#"{"scenario": "cpb-bands", "parameters": {"ej_over_ec": [1, 10, 50], "nmax": 10},
            "grid": {"ng": {"start": 0, "stop": 1, "count": 201}}}"#,
    )
    .map_err(|e| e.to_string())?;
    let run = cqed_lab::execute(find("cpb-bands").unwrap(), &raw, &[], None, false).map_err(|e| e.to_string())?;
    let panels = run.table.rows.len() == 3 * 201;
    check(
        rel_a <= 0.02 && disp < 1e-3 && rel_b <= 0.01 && run.warnings.is_empty() && panels,
        format!(
            "(a) w01 {:.4} vs sqrt(8EJEC)-EC {oracle:.4} (rel {rel_a:.1e}), Ng dispersion {disp:.1e}; (b) gap/EJ - 1 = {rel_b:.1e}; (c) 3 panels, {} warnings",
            w01[0],
            run.warnings.len()
        ),
    )
}

fn jc() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let wr = 5.0;
    let n_cav = 12;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (delta, g) = (rng.gen_range(-1.0..1.0), rng.gen_range(0.01..0.5));
        let wq = wr + delta;
        let p = JcmParams { omega_r: wr, omega_q: wq, g, n_cav };
        let es = eig_hermitian(&jc_hamiltonian(&p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        // closed-form spectrum of the truncated matrix: ground, doublets, lone top state
        let mut analytic = vec![-wq / 2.0, (n_cav - 1) as f64 * wr + wq / 2.0];
        for n in 0..n_cav - 1 {
            let d = jc_doublet(n, wr, delta, g);
            analytic.extend([d.e_minus, d.e_plus]);
        }
        analytic.sort_by(f64::total_cmp);
        for (k, (a, b)) in analytic.iter().zip(&es.values).enumerate() {
            // manifolds n <= 5 lie in the lowest 13 levels for these ranges
            if k < 13 {
                worst = worst.max((a - b).abs() / a.abs());
            }
        }
    }
    let mut shift: f64 = 0.0;
    for &(d, g) in &[(0.0, 0.1), (0.4, 0.3), (-0.7, 0.05)] {
        let lowest = |n_cav| -> Result<Vec<f64>, String> {
            let p = JcmParams { omega_r: wr, omega_q: wr + d, g, n_cav };
            Ok(eig_hermitian(&jc_hamiltonian(&p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.values[..8].to_vec())
        };
        for (a, b) in lowest(20)?.iter().zip(lowest(40)?) {
            shift = shift.max((a - b).abs() / a.abs());
        }
    }
    check(
        worst <= 1e-12 && shift <= 1e-8,
        format!("doublets vs diagonalization rel {worst:.1e} (limit 1e-12); n_cav 20->40 shift {shift:.1e} (limit 1e-8)"),
    )
}

fn polariton() -> Outcome {
    let g = 0.05;
    let p = JcmParams { omega_r: 6.0, omega_q: 5.0, g, n_cav: 6 };
    let chi = g * g / (p.omega_r - p.omega_q);
    let od = 1e-4;
    let b21 = polariton_basis(&p, &DriveSpec { omega_d: p.omega_q - chi, big_omega_d: od }).map_err(|e| e.to_string())?;
    let b43 = polariton_basis(&p, &DriveSpec { omega_d: p.omega_q - 3.0 * chi, big_omega_d: od }).map_err(|e| e.to_string())?;
    let e21 = (b21.omega_21 - 2.0 * od).abs() / (2.0 * od);
    let e43 = (b43.omega_43 - 2.0 * od).abs() / (2.0 * od);
    let bound = 5.0 * (g / (p.omega_q - p.omega_r)).abs().powi(3) * g;
    let mut dev: f64 = 0.0;
    for frac in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let wd = p.omega_q - 3.0 * chi + 2.0 * chi * frac;
        let x = polariton_cross_check(&p, &DriveSpec { omega_d: wd, big_omega_d: od }).map_err(|e| e.to_string())?;
        dev = dev.max(x.deviation);
    }
    check(
        e21 <= 1e-12 && e43 <= 1e-12 && dev <= bound,
        format!("w21 rel {e21:.1e}, w43 rel {e43:.1e} (limit 1e-12); 4x4 deviation {dev:.3e} vs 5(g/D)^3 g = {bound:.3e}"),
    )
}

fn normalized(v: &[C64]) -> Vec<C64> {
    let m = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    v.iter().map(|z| z / m).collect()
}

/// Local maxima of `y` refined by a parabola through three samples.
fn peaks(x: &[f64], y: &[f64]) -> Vec<(f64, f64)> {
    let h = x[1] - x[0];
    let mut out: Vec<(f64, f64)> = (1..y.len() - 1)
        .filter(|&k| y[k] > y[k - 1] && y[k] >= y[k + 1])
        .map(|k| {
            let den = y[k - 1] - 2.0 * y[k] + y[k + 1];
            (x[k] + 0.5 * h * (y[k - 1] - y[k + 1]) / den, y[k])
        })
        .collect();
    out.sort_by(|a, b| b.1.total_cmp(&a.1));
    out
}

fn eit() -> Outcome {
    let d = LambdaDecays { gamma31: 1.0, gamma32: 0.0, gamma21: 1e-3 };
    let g31 = d.gamma_total();
    let grid = linspace(-5.0 * g31, 5.0 * g31, 400);
    let mut shape: f64 = 0.0;
    let mut spectrum_time = Duration::ZERO;
    for oc in [0.2, 5.0] {
        let spec = ProbeControlSpec { omega_p: g31 / 100.0, omega_c: oc, delta1: 0.0, delta2: 0.0 };
        let i = Complex::i();
        // closed form written out independently of the library
        let oracle: Vec<C64> = grid
            .iter()
            .map(|&x| (x - i * d.gamma21 / 2.0) / ((x - i * g31 / 2.0) * (x - i * d.gamma21 / 2.0) - oc * oc / 4.0))
            .collect();
        let analytic: Vec<C64> = grid.iter().map(|&x| eit_chi1(&spec.at_two_photon(x), &d)).collect();
        let t0 = Instant::now();
        let numeric: Vec<C64> = grid
            .iter()
            .map(|&x| eit_numeric_point(&spec.at_two_photon(x), &d).map(|p| p.chi))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        spectrum_time = spectrum_time.max(t0.elapsed());
        for ((a, o), n) in normalized(&analytic).iter().zip(normalized(&oracle)).zip(normalized(&numeric)) {
            shape = shape.max((a - n).norm()).max((a - o).norm());
        }
    }

    let d0 = LambdaDecays { gamma21: 0.0, ..d };
    let s0 = ProbeControlSpec { omega_p: 0.01, omega_c: 0.3, delta1: 0.0, delta2: 0.0 };
    let transparency = eit_chi1(&s0, &d0).im.abs();
    let numeric_t = eit_numeric_point(&s0, &d0).map_err(|e| e.to_string())?.chi.im.abs();

    let mut flips = true;
    for dd in [d, d0, LambdaDecays { gamma31: 3.0, gamma32: 1.0, gamma21: 0.2 }] {
        let thr = (dd.gamma_total() - dd.gamma21) / 2.0;
        flips &= eit_poles(thr * (1.0 - 1e-9), &dd).regime == Regime::Eit
            && eit_poles(thr, &dd).regime == Regime::Boundary
            && eit_poles(thr * (1.0 + 1e-9), &dd).regime == Regime::Ats;
    }
    let oc = 5.0 * g31;
    let fine = linspace(-5.0 * g31, 5.0 * g31, 20001);
    let im: Vec<f64> = fine
        .iter()
        .map(|&x| eit_chi1(&ProbeControlSpec { omega_p: 0.01, omega_c: oc, delta1: x, delta2: 0.0 }, &d).im)
        .collect();
    let pk = peaks(&fine, &im);
    let sep = if pk.len() >= 2 { (pk[0].0 - pk[1].0).abs() } else { f64::NAN };
    let sep_rel = (sep / oc - 1.0).abs();
    let within_budget = spectrum_time < Duration::from_secs(30);
    check(
        shape <= 0.02 && transparency <= 1e-10 && numeric_t <= 1e-10 && flips && sep_rel <= 0.05 && within_budget,
        format!(
            "(a) shape mismatch {shape:.1e} (limit 2e-2), 400-point spectrum {:.2} s; (b) |Im chi(0)| {transparency:.1e}, numeric {numeric_t:.1e}; (c) flips at threshold {flips}, ATS peak separation {sep:.4} vs {oc} (rel {sep_rel:.1e})",
            spectrum_time.as_secs_f64()
        ),
    )
}

fn stirap() -> Outcome {
    let sigma = 1.0;
    let cfg = |omega: f64, cd: bool| StirapConfig::new(omega / sigma, omega / sigma, sigma, -1.5 * sigma, cd);
    let slow = run_protocol(&cfg(15.0, false), None, 2001).map_err(|e| e.to_string())?;
    let fast = run_protocol(&cfg(2.0, false), None, 201).map_err(|e| e.to_string())?;
    let assisted = run_protocol(&cfg(2.0, true), None, 201).map_err(|e| e.to_string())?;
    let mut dark: f64 = 0.0;
    let c = cfg(15.0, false);
    for &t in &slow.trajectory.times {
        let h = stirap_hamiltonian(t, &c).map_err(|e| e.to_string())?;
        let n0: Vec<C64> = dark_state(t, &c).map_err(|e| e.to_string())?.iter().map(|&x| Complex::new(x, 0.0)).collect();
        dark = dark.max(h.apply(&n0).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt());
    }
    check(
        slow.p2 >= 0.99 && slow.max_p3 <= 0.05 && fast.p2 < 0.9 && assisted.p2 >= 0.999 && dark <= 1e-12,
        format!(
            "W sigma = 15: P2 {:.5}, max P3 {:.4}; W sigma = 2: P2 {:.4} plain, {:.7} with CD; max |H n0| {dark:.1e}",
            slow.p2, slow.max_p3, fast.p2, assisted.p2
        ),
    )
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_cqed-lab");
    let mut differing = Vec::new();
    for name in names() {
        let def = find(name).unwrap();
        let mut args = vec![name.to_string()];
        if def.cross_check && name != "rabi" {
            args.push("--cross-check".into());
        }
        let run = |jobs: &str| {
            Command::new(exe).args(&args).args(["--jobs", jobs]).output().map(|o| (o.status.code(), o.stdout))
        };
        let (a, b) = (run("1").map_err(|e| e.to_string())?, run("4").map_err(|e| e.to_string())?);
        let c = run("4").map_err(|e| e.to_string())?;
        if a.0 != Some(0) || a != b || a != c || a.1.is_empty() {
            differing.push(name);
        }
    }
    check(
        differing.is_empty(),
        format!("{} scenarios re-run byte-identical across runs and --jobs 1/4; differing: {differing:?}", names().len()),
    )
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("rabi oscillation", 1, rabi),
        ("steady state", 5, steady),
        ("power-broadened line", 1, fig4),
        ("cpb spectra", 10, cpb),
        ("jc doublets", 5, jc),
        ("polariton splittings", 1, polariton),
        ("eit/ats", 30, eit),
        ("stirap/sastirap", 10, stirap),
        ("determinism", 120, determinism),
    ];
    let mut failed = 0;
    for (k, (name, budget, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = f();
        let dt = t0.elapsed();
        let over = dt > Duration::from_secs(*budget);
        let (tag, msg) = match (&outcome, over) {
            (Ok(m), false) => ("PASS", m.clone()),
            (Ok(m), true) => ("FAIL", format!("{m}; over the {budget} s budget")),
            (Err(m), _) => ("FAIL", m.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} {} {name} [{:.3} s / {budget} s]: {msg}", k + 1, dt.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
