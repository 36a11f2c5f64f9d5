// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Physical constants (SI, CODATA exact values where defined).

use std::f64::consts::PI;

/// SI constants used by the circuit builders.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J s.
    pub hbar: f64,
    /// Elementary charge, C.
    pub e_charge: f64,
    /// Vacuum permittivity, F/m.
    pub eps0: f64,
    /// Speed of light, m/s.
    pub c_light: f64,
    /// Superconducting flux quantum h/2e, Wb.
    pub flux_quantum: f64,
    /// Superconducting resistance quantum h/(2e)^2, Ohm.
    pub resistance_quantum: f64,
}

const H_PLANCK: f64 = 6.626_070_15e-34;
const E_CHARGE: f64 = 1.602_176_634e-19;

pub const CODATA: PhysicalConstants = PhysicalConstants {
    hbar: H_PLANCK / (2.0 * PI),
    e_charge: E_CHARGE,
    eps0: 8.854_187_812_8e-12,
    c_light: 299_792_458.0,
    flux_quantum: H_PLANCK / (2.0 * E_CHARGE),
    resistance_quantum: H_PLANCK / (4.0 * E_CHARGE * E_CHARGE),
};

impl Default for PhysicalConstants {
    fn default() -> Self {
        CODATA
    }
}
