// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex;

use crate::dynamics::steady_state;
use crate::error::{Error, Result};
use crate::{LindbladModel, Operator, C64};

/// Decay rates of the Lambda system.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaDecays {
    pub gamma31: f64,
    pub gamma32: f64,
    pub gamma21: f64,
}

impl LambdaDecays {
    pub fn validate(&self) -> Result<()> {
        for (name, x) in [("gamma31", self.gamma31), ("gamma32", self.gamma32), ("gamma21", self.gamma21)] {
            if !(x >= 0.0 && x.is_finite()) {
                return Err(Error::Domain(format!("{name} must be finite and >= 0, got {x}")));
            }
        }
        Ok(())
    }

    /// `Gamma31 = gamma31 + gamma32`.
    pub fn gamma_total(&self) -> f64 {
        self.gamma31 + self.gamma32
    }
}

/// Probe and control fields.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeControlSpec {
    pub omega_p: f64,
    pub omega_c: f64,
    /// Probe detuning `omega_31 - omega_p`.
    pub delta1: f64,
    /// Control detuning `omega_32 - omega_c`.
    pub delta2: f64,
}

impl ProbeControlSpec {
    /// Two-photon detuning `Delta1 - Delta2`.
    pub fn delta(&self) -> f64 {
        self.delta1 - self.delta2
    }

    /// Same fields at two-photon detuning `delta`, control detuning kept.
    pub fn at_two_photon(&self, delta: f64) -> Self {
        Self { delta1: delta + self.delta2, ..*self }
    }
}

/// `(delta - i g21/2) / [(delta - i G31/2)(delta + Delta2 - i g21/2) - Oc^2/4]`.
pub fn eit_chi1(s: &ProbeControlSpec, d: &LambdaDecays) -> C64 {
    let i = Complex::i();
    let delta = s.delta();
    let num = delta - i * (d.gamma21 / 2.0);
    let den = (delta - i * (d.gamma_total() / 2.0)) * (delta + s.delta2 - i * (d.gamma21 / 2.0))
        - s.omega_c * s.omega_c / 4.0;
    num / den
}

/// First-order probe response of the master equation:
/// `(delta - i g21/2) / [(delta + Delta2 - i G31/2)(delta - i g21/2) - Oc^2/4]`.
/// Identical to [`eit_chi1`] at `Delta2 = 0`.
pub fn eit_chi1_weak_probe(s: &ProbeControlSpec, d: &LambdaDecays) -> C64 {
    let i = Complex::i();
    let delta = s.delta();
    let raman = delta - i * (d.gamma21 / 2.0);
    raman / ((s.delta1 - i * (d.gamma_total() / 2.0)) * raman - s.omega_c * s.omega_c / 4.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Eit,
    Ats,
    Boundary,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Eit => "EIT",
            Regime::Ats => "ATS",
            Regime::Boundary => "boundary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EitPoles {
    pub delta_plus: C64,
    pub delta_minus: C64,
    pub regime: Regime,
    /// `(Gamma31 - gamma21) / 2`.
    pub threshold: f64,
}

/// Poles `i (g21 + G31)/4 +- sqrt(Oc^2 - (G31 - g21)^2/4) / 2` at `Delta2 = 0`
/// and the regime: ATS above `Oc = (G31 - g21)/2`, EIT below.
pub fn eit_poles(omega_c: f64, d: &LambdaDecays) -> EitPoles {
    let g = d.gamma_total();
    let center = Complex::new(0.0, (d.gamma21 + g) / 4.0);
    let disc = omega_c * omega_c - (g - d.gamma21).powi(2) / 4.0;
    let root = Complex::new(disc, 0.0).sqrt() / 2.0;
    let threshold = (g - d.gamma21) / 2.0;
    let scale = threshold.abs().max(omega_c.abs());
    let regime = if (omega_c - threshold).abs() <= 1e-12 * scale {
        Regime::Boundary
    } else if omega_c > threshold {
        Regime::Ats
    } else {
        Regime::Eit
    };
    EitPoles { delta_plus: center + root, delta_minus: center - root, regime, threshold }
}

/// Residues `chi_pm = +-(delta_pm - i g21/2) / (delta_+ - delta_-)`.
pub fn eit_residues(omega_c: f64, d: &LambdaDecays) -> Result<(C64, C64)> {
    let p = eit_poles(omega_c, d);
    let gap = p.delta_plus - p.delta_minus;
    if gap.norm() == 0.0 {
        return Err(Error::Domain("poles coincide; no simple-pole decomposition".into()));
    }
    let h = Complex::new(0.0, d.gamma21 / 2.0);
    Ok(((p.delta_plus - h) / gap, -(p.delta_minus - h) / gap))
}

/// `chi_+/(delta - delta_+) + chi_-/(delta - delta_-)` at `Delta2 = 0`.
pub fn eit_chi1_partial_fractions(delta: f64, omega_c: f64, d: &LambdaDecays) -> Result<C64> {
    let p = eit_poles(omega_c, d);
    let (cp, cm) = eit_residues(omega_c, d)?;
    let x = Complex::new(delta, 0.0);
    Ok(cp / (x - p.delta_plus) + cm / (x - p.delta_minus))
}

/// Master-equation model in the doubly rotating frame, basis
/// `(|1>, |2>, |3>)`:
/// `H = -Delta1 |3><3| - delta |2><2| - (Op |3><1| + Oc |3><2| + h.c.)/2`
/// with jumps `|1><3|` (gamma31), `|2><3|` (gamma32), `|1><2|` (gamma21).
pub fn eit_model(s: &ProbeControlSpec, d: &LambdaDecays) -> Result<LindbladModel> {
    d.validate()?;
    let mut h = Operator::zeros(3);
    h[(2, 2)] = Complex::new(-s.delta1, 0.0);
    h[(1, 1)] = Complex::new(-s.delta(), 0.0);
    for (k, w) in [(0, s.omega_p), (1, s.omega_c)] {
        h[(2, k)] = Complex::new(-w / 2.0, 0.0);
        h[(k, 2)] = Complex::new(-w / 2.0, 0.0);
    }
    LindbladModel::new(h)?
        .with_channel(Operator::ket_bra(3, 0, 2), d.gamma31)?
        .with_channel(Operator::ket_bra(3, 1, 2), d.gamma32)?
        .with_channel(Operator::ket_bra(3, 0, 1), d.gamma21)
}

/// Maps the steady-state coherence onto the normalization of [`eit_chi1`]:
/// `chi = -2 conj(rho31) / Omega_p`.
pub fn chi_from_rho31(rho31: C64, omega_p: f64) -> C64 {
    -2.0 * rho31.conj() / omega_p
}

/// Steady state at one detuning.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EitPoint {
    pub delta: f64,
    pub rho31: C64,
    pub rho11: f64,
    /// [`chi_from_rho31`] of `rho31`.
    pub chi: C64,
}

/// Weak-probe steady state for `s`. Requires `Omega_p <= Gamma31 / 50`.
pub fn eit_numeric_point(s: &ProbeControlSpec, d: &LambdaDecays) -> Result<EitPoint> {
    d.validate()?;
    let limit = d.gamma_total() / 50.0;
    if !(s.omega_p > 0.0 && s.omega_p <= limit) {
        return Err(Error::Precondition(format!(
            "weak probe needs 0 < Omega_p <= Gamma31/50 = {limit}, got {}",
            s.omega_p
        )));
    }
    let rho = steady_state(&eit_model(s, d)?)?;
    let rho31 = rho[(2, 0)];
    Ok(EitPoint { delta: s.delta(), rho31, rho11: rho[(0, 0)].re, chi: chi_from_rho31(rho31, s.omega_p) })
}

/// [`eit_numeric_point`] over two-photon detunings, control detuning fixed.
pub fn eit_numeric_spectrum(template: &ProbeControlSpec, d: &LambdaDecays, delta_grid: &[f64]) -> Result<Vec<EitPoint>> {
    delta_grid.iter().map(|&x| eit_numeric_point(&template.at_two_photon(x), d)).collect()
}
