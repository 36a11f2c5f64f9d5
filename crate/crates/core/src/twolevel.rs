// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Driven two-level system in closed form.
//!
//! Rotating frame with `H = -Delta |e><e| - G (|e><g| + |g><e|)` and
//! coherence decay `gamma` (population decay `2 gamma`). Basis index 0 is
//! `|g>`, 1 is `|e>`.

use std::f64::consts::PI;

use num_complex::Complex;

use crate::constants::CODATA;
use crate::dynamics::LindbladModel;
use crate::error::{Error, Result};
use crate::opalg::{pauli_x, sigma_minus};
use crate::{Operator, C64};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TlsDriveParams {
    /// Coherence decay rate, 1/s.
    pub gamma: f64,
    /// omega - omega_eg, rad/s.
    pub delta: f64,
    /// Rabi coupling G, rad/s.
    pub rabi_g: f64,
    /// Number density, 1/m^3.
    pub density: f64,
    /// |d_eg|, C m.
    pub dipole: f64,
}

impl TlsDriveParams {
    pub fn validate(&self) -> Result<()> {
        for (name, x) in [("gamma", self.gamma), ("density", self.density), ("dipole", self.dipole)] {
            if !(x >= 0.0 && x.is_finite()) {
                return Err(Error::Domain(format!("{name} must be finite and >= 0, got {x}")));
            }
        }
        if !self.delta.is_finite() || !self.rabi_g.is_finite() {
            return Err(Error::Domain("detuning and Rabi coupling must be finite".into()));
        }
        Ok(())
    }

    /// Generalized Rabi frequency `sqrt(Delta^2 + 4 G^2)`.
    pub fn generalized_rabi(&self) -> f64 {
        (self.delta * self.delta + 4.0 * self.rabi_g * self.rabi_g).sqrt()
    }

    /// `N |d|^2 / (hbar eps0)`.
    pub fn chi_prefactor(&self) -> f64 {
        self.density * self.dipole * self.dipole / (CODATA.hbar * CODATA.eps0)
    }
}

/// Lossless ground-state population
/// `cos^2(Wt/2) + (Delta/W)^2 sin^2(Wt/2)`, `W = sqrt(Delta^2 + 4G^2)`.
pub fn rabi_population_gg(p: &TlsDriveParams, t: f64) -> f64 {
    let w = p.generalized_rabi();
    if w == 0.0 {
        return 1.0;
    }
    let (s, c) = (w * t / 2.0).sin_cos();
    c * c + (p.delta / w).powi(2) * s * s
}

/// Steady state `(rho_ee, rho_eg)`.
pub fn tls_steady(p: &TlsDriveParams) -> Result<(f64, C64)> {
    if !(p.gamma > 0.0) {
        return Err(Error::NoSteadyState("a lossless two-level system keeps oscillating".into()));
    }
    let den = denominator(p, p.delta);
    let ree = p.rabi_g * p.rabi_g / den;
    let reg = Complex::new(0.0, p.rabi_g) * Complex::new(p.gamma, p.delta) / den;
    Ok((ree, reg))
}

fn denominator(p: &TlsDriveParams, delta: f64) -> f64 {
    p.gamma * p.gamma + delta * delta + 2.0 * p.rabi_g * p.rabi_g
}

/// `chi(Delta) = prefactor (-Delta + i gamma) / (gamma^2 + Delta^2 + 2G^2)`.
pub fn tls_susceptibility(p: &TlsDriveParams, delta_grid: &[f64]) -> Result<Vec<C64>> {
    p.validate()?;
    if !(p.gamma > 0.0) {
        return Err(Error::Domain("susceptibility needs gamma > 0".into()));
    }
    let pre = p.chi_prefactor();
    Ok(delta_grid.iter().map(|&d| Complex::new(-d, p.gamma) * (pre / denominator(p, d))).collect())
}

/// Full width at half maximum of `Im chi`: `2 sqrt(gamma^2 + 2G^2)`.
pub fn fwhm(p: &TlsDriveParams) -> f64 {
    2.0 * half_width(p)
}

/// Half width `sqrt(gamma^2 + 2G^2)` (the quantity sometimes quoted as the
/// line width of the power-broadened Lorentzian).
pub fn half_width(p: &TlsDriveParams) -> f64 {
    (p.gamma * p.gamma + 2.0 * p.rabi_g * p.rabi_g).sqrt()
}

/// `|d|^2 = 3 pi eps0 hbar c^3 (2 gamma) / omega^3`, from the spontaneous
/// emission rate `2 gamma` at angular frequency `omega`.
pub fn dipole_from_decay(gamma: f64, omega: f64) -> f64 {
    let c3 = CODATA.c_light.powi(3);
    (3.0 * PI * CODATA.eps0 * CODATA.hbar * c3 * 2.0 * gamma / omega.powi(3)).sqrt()
}

/// The equivalent master-equation model: one `sigma_minus` channel at rate
/// `2 gamma`, so populations relax at `2 gamma` and coherences at `gamma`.
pub fn lindblad_model(p: &TlsDriveParams) -> Result<LindbladModel<f64>> {
    p.validate()?;
    let h = &Operator::projector(2, 1).scale_real(-p.delta) + &pauli_x::<f64>().scale_real(-p.rabi_g);
    LindbladModel::new(h)?.with_channel(sigma_minus(), 2.0 * p.gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::steady_state;

    fn params(gamma: f64, delta: f64, g: f64) -> TlsDriveParams {
        TlsDriveParams { gamma, delta, rabi_g: g, density: 1e18, dipole: 1e-29 }
    }

    #[test]
    fn rabi_examples() {
        let p = params(0.0, 0.0, 0.8);
        let w = p.generalized_rabi();
        assert!(rabi_population_gg(&p, PI / w).abs() < 1e-15);
        assert_eq!(rabi_population_gg(&p, 0.0), 1.0);
        let q = params(0.0, 1.0, 0.5);
        let wq = q.generalized_rabi();
        assert!((rabi_population_gg(&q, PI / wq) - 0.5).abs() < 1e-15);
        assert_eq!(rabi_population_gg(&params(0.0, 0.0, 0.0), 3.0), 1.0);
    }

    #[test]
    fn steady_examples() {
        let (ree, _) = tls_steady(&params(1.0, 0.3, 1e6)).unwrap();
        assert!((ree - 0.5).abs() < 1e-9);
        let (_, reg) = tls_steady(&params(0.7, 0.0, 0.4)).unwrap();
        assert!(reg.re == 0.0 && (reg.im - 0.4 * 0.7 / (0.49 + 0.32)).abs() < 1e-15);
        assert!(matches!(tls_steady(&params(0.0, 0.1, 0.1)), Err(Error::NoSteadyState(_))));
    }

    #[test]
    fn steady_matches_liouvillian() {
        let p = params(0.35, -0.6, 0.9);
        let rho = steady_state(&lindblad_model(&p).unwrap()).unwrap();
        let (ree, reg) = tls_steady(&p).unwrap();
        assert!((rho[(1, 1)].re - ree).abs() < 1e-10);
        assert!((rho[(1, 0)] - reg).norm() < 1e-10);
    }

    #[test]
    fn susceptibility_at_resonance_and_width() {
        let p = params(2.0, 0.0, 1.0);
        let chi = tls_susceptibility(&p, &[0.0]).unwrap()[0];
        assert_eq!(chi.re, 0.0);
        assert!((chi.im - p.chi_prefactor() * 2.0 / (4.0 + 2.0)).abs() < 1e-12 * chi.im);
        let hw = half_width(&p);
        let edge = tls_susceptibility(&p, &[hw]).unwrap()[0];
        assert!((edge.im / chi.im - 0.5).abs() < 1e-14);
        assert_eq!(fwhm(&p), 2.0 * hw);
        assert_eq!(fwhm(&params(2.0, 0.0, 0.0)), 4.0);
    }

    #[test]
    fn dipole_helper_round_trip() {
        let omega = 2.0 * PI * CODATA.c_light / 780e-9;
        let d = dipole_from_decay(3.81e7 / 2.0, omega);
        let rate = omega.powi(3) * d * d / (3.0 * PI * CODATA.eps0 * CODATA.hbar * CODATA.c_light.powi(3));
        assert!((rate / 3.81e7 - 1.0).abs() < 1e-12);
        // order of magnitude of an alkali D2 dipole
        assert!(d > 1e-29 && d < 1e-28);
    }
}
