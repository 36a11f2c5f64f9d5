// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex;

use super::eit::LambdaDecays;
use crate::dynamics::{evolve_with, EvolveOptions};
use crate::error::{Error, Result};
use crate::{LindbladModel, Operator, PulseEnvelope, Trajectory};

/// Envelopes below this are treated as vanished.
const ENVELOPE_FLOOR: f64 = 1e-300;

/// Gaussian pump centred at 0 and Stokes centred at `t_s`, common width
/// `sigma`. A counterintuitive sequence has `t_s < 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StirapConfig {
    pub omega_p_peak: f64,
    pub omega_s_peak: f64,
    pub sigma: f64,
    pub t_s: f64,
    pub t_span: (f64, f64),
    pub cd_enabled: bool,
}

impl StirapConfig {
    /// Config with the default span `[-4 sigma + min(0, t_s), 4 sigma + max(0, t_s)]`.
    pub fn new(omega_p_peak: f64, omega_s_peak: f64, sigma: f64, t_s: f64, cd_enabled: bool) -> Self {
        Self {
            omega_p_peak,
            omega_s_peak,
            sigma,
            t_s,
            t_span: Self::default_span(sigma, t_s),
            cd_enabled,
        }
    }

    pub fn default_span(sigma: f64, t_s: f64) -> (f64, f64) {
        (-4.0 * sigma + t_s.min(0.0), 4.0 * sigma + t_s.max(0.0))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::Domain(format!("sigma must be finite and > 0, got {}", self.sigma)));
        }
        for (name, x) in [("omega_p_peak", self.omega_p_peak), ("omega_s_peak", self.omega_s_peak)] {
            if !(x > 0.0 && x.is_finite()) {
                return Err(Error::Domain(format!("{name} must be finite and > 0, got {x}")));
            }
        }
        if !self.t_s.is_finite() {
            return Err(Error::Domain("t_s must be finite".into()));
        }
        let (a, b) = self.t_span;
        let (lo, hi) = Self::default_span(self.sigma, self.t_s);
        if !(a.is_finite() && b.is_finite() && a <= lo && b >= hi) {
            return Err(Error::Domain(format!(
                "t_span [{a}, {b}] must cover [{lo}, {hi}] (4 sigma beyond both pulse centres)"
            )));
        }
        Ok(())
    }

    fn pump(&self) -> Result<PulseEnvelope> {
        PulseEnvelope::gaussian(self.omega_p_peak, 0.0, self.sigma)
    }

    fn stokes(&self) -> Result<PulseEnvelope> {
        PulseEnvelope::gaussian(self.omega_s_peak, self.t_s, self.sigma)
    }

    fn equal_peaks(&self) -> bool {
        (self.omega_p_peak - self.omega_s_peak).abs() <= 1e-12 * self.omega_p_peak.max(self.omega_s_peak)
    }

    /// `2 theta-dot` as a sech pulse; `None` when `t_s = 0` (theta constant).
    fn cd_envelope(&self) -> Option<PulseEnvelope> {
        if self.t_s == 0.0 {
            return None;
        }
        let rate = self.t_s / (self.sigma * self.sigma);
        let center = self.t_s / 2.0 + (self.omega_p_peak / self.omega_s_peak).ln() / rate;
        PulseEnvelope::sech(-rate, center, 1.0 / rate.abs()).ok().map(|e| e.with_phase(FRAC_PI_2))
    }

    /// `ln(Omega_p(t) / Omega_s(t))` without evaluating the Gaussians.
    fn log_ratio(&self, t: f64) -> f64 {
        let s2 = 2.0 * self.sigma * self.sigma;
        (self.omega_p_peak / self.omega_s_peak).ln() - t * t / s2 + (t - self.t_s).powi(2) / s2
    }
}

/// Instantaneous `H(t)` in the basis `(|1>, |3>, |2>)`:
/// `1/2 [[0, Op, i Oa], [Op, 0, Os], [-i Oa, Os, 0]]`, with `Oa = 0` unless
/// the counterdiabatic drive is enabled.
pub fn stirap_hamiltonian(t: f64, cfg: &StirapConfig) -> Result<Operator> {
    cfg.validate()?;
    let op = cfg.pump()?.shape(t);
    let os = cfg.stokes()?.shape(t);
    let oa = if cfg.cd_enabled { cd_amplitude_exact(t, cfg)? } else { 0.0 };
    let mut h = Operator::zeros(3);
    h[(0, 1)] = Complex::new(op / 2.0, 0.0);
    h[(1, 0)] = h[(0, 1)];
    h[(1, 2)] = Complex::new(os / 2.0, 0.0);
    h[(2, 1)] = h[(1, 2)];
    h[(0, 2)] = Complex::new(0.0, oa / 2.0);
    h[(2, 0)] = Complex::new(0.0, -oa / 2.0);
    Ok(h)
}

/// Counterdiabatic amplitude for equal peaks:
/// `-(t_s/sigma^2) sech[-(t_s/sigma^2)(t - t_s/2)]`.
pub fn cd_amplitude(t: f64, cfg: &StirapConfig) -> Result<f64> {
    cfg.validate()?;
    if !cfg.equal_peaks() {
        return Err(Error::Precondition(format!(
            "closed-form CD amplitude needs equal peaks (Omega_p = {}, Omega_s = {}); use cd_amplitude_exact",
            cfg.omega_p_peak, cfg.omega_s_peak
        )));
    }
    let rate = cfg.t_s / (cfg.sigma * cfg.sigma);
    Ok(-rate * sech(-rate * (t - cfg.t_s / 2.0)))
}

/// `2 d(theta)/dt` for arbitrary peaks.
pub fn cd_amplitude_exact(t: f64, cfg: &StirapConfig) -> Result<f64> {
    cfg.validate()?;
    Ok(cfg.cd_envelope().map_or(0.0, |e| e.shape(t)))
}

fn sech(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MixingAngle {
    /// `atan2(Omega_p, Omega_s)`.
    pub theta: f64,
    pub theta_dot: f64,
    /// `sqrt(Omega_p^2 + Omega_s^2)`.
    pub omega0: f64,
    /// `|theta-dot| / Omega0`; small means adiabatic.
    pub adiabaticity: f64,
}

/// Mixing angle and its rate. Fails when both envelopes fall below 1e-300.
pub fn mixing_angle(t: f64, cfg: &StirapConfig) -> Result<MixingAngle> {
    cfg.validate()?;
    let op = cfg.pump()?.shape(t);
    let os = cfg.stokes()?.shape(t);
    if op < ENVELOPE_FLOOR && os < ENVELOPE_FLOOR {
        return Err(Error::UndefinedAngle { time: t });
    }
    let lr = cfg.log_ratio(t);
    let theta = if lr <= 0.0 { lr.exp().atan() } else { FRAC_PI_2 - (-lr).exp().atan() };
    let theta_dot = cd_amplitude_exact(t, cfg)? / 2.0;
    let omega0 = op.hypot(os);
    Ok(MixingAngle { theta, theta_dot, omega0, adiabaticity: theta_dot.abs() / omega0 })
}

/// Dark state `cos(theta)|1> - sin(theta)|2>` in the `(|1>, |3>, |2>)` basis.
pub fn dark_state(t: f64, cfg: &StirapConfig) -> Result<[f64; 3]> {
    let th = mixing_angle(t, cfg)?.theta;
    Ok([th.cos(), 0.0, -th.sin()])
}

/// Time-dependent model for [`run_protocol`]. Decays, if given, act as
/// `|1><3|` (gamma31), `|2><3|` (gamma32) and `|1><2|` (gamma21).
pub fn stirap_model(cfg: &StirapConfig, decays: Option<&LambdaDecays>) -> Result<LindbladModel> {
    cfg.validate()?;
    let half = |i, j| Operator::ket_bra(3, i, j).scale_real(0.5);
    let mut model = LindbladModel::new(Operator::zeros(3))?
        .with_drive(half(0, 1), cfg.pump()?)?
        .with_drive(half(1, 2), cfg.stokes()?)?;
    if cfg.cd_enabled {
        if let Some(env) = cfg.cd_envelope() {
            model = model.with_drive(half(0, 2), env)?;
        }
    }
    if let Some(d) = decays {
        d.validate()?;
        model = model
            .with_channel(Operator::ket_bra(3, 0, 1), d.gamma31)?
            .with_channel(Operator::ket_bra(3, 2, 1), d.gamma32)?
            .with_channel(Operator::ket_bra(3, 0, 2), d.gamma21)?;
    }
    Ok(model)
}

#[derive(Clone, Debug)]
pub struct StirapRun {
    /// Observables `P1`, `P2`, `P3` (populations of `|1>`, `|2>`, `|3>`).
    pub trajectory: Trajectory,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub max_p3: f64,
}

/// Runs the protocol from `|1>` over `t_span`, recording `n_times >= 2`
/// equally spaced samples.
pub fn run_protocol(cfg: &StirapConfig, decays: Option<&LambdaDecays>, n_times: usize) -> Result<StirapRun> {
    if n_times < 2 {
        return Err(Error::Domain("need at least two output times".into()));
    }
    let model = stirap_model(cfg, decays)?;
    let (a, b) = cfg.t_span;
    let times: Vec<f64> = (0..n_times).map(|k| a + (b - a) * k as f64 / (n_times - 1) as f64).collect();
    let opts = EvolveOptions {
        observables: vec![
            ("P1".to_string(), Operator::projector(3, 0)),
            ("P2".to_string(), Operator::projector(3, 2)),
            ("P3".to_string(), Operator::projector(3, 1)),
        ],
        ..EvolveOptions::default()
    };
    let trajectory = evolve_with(&model, &Operator::projector(3, 0), &times, &opts)?;
    let last = |k: &str| *trajectory.observables[k].last().unwrap();
    let max_p3 = trajectory.observables["P3"].iter().copied().fold(0.0, f64::max);
    Ok(StirapRun { p1: last("P1"), p2: last("P2"), p3: last("P3"), max_p3, trajectory })
}
