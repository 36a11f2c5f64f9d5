// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Circuit Hamiltonians and derived parameters.
//!
//! SI units at this boundary for the LC, transmission-line, junction and
//! TLS builders. The charge-qubit builders take `EC`, `EJ` as energies
//! divided by hbar (any consistent frequency unit) and use
//! `H = 4 EC (N - Ng)^2 - EJ cos(phi)` with `EC = e^2 / 2 C_Sigma`. The
//! other common form `EC' (N - Ng)^2` with `EC' = (2e)^2 / 2 C_Sigma` maps
//! by `EC' = 4 EC`.

use std::f64::consts::PI;

use num_complex::Complex;

use crate::constants::{PhysicalConstants, CODATA};
use crate::error::{Error, Result};
use crate::opalg::{create, destroy, eig_hermitian, pauli_x, pauli_z};
use crate::Operator;

fn positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {x}")))
    }
}

/// Quantized LC oscillator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscillatorParams {
    pub l: f64,
    pub c: f64,
    /// 1/sqrt(LC), rad/s.
    pub omega: f64,
    /// sqrt(L/C), Ohm.
    pub z: f64,
    /// Z / R_Q.
    pub z_reduced: f64,
    /// sqrt(hbar / 2Z), C.
    pub q_zpf: f64,
    /// sqrt(hbar Z / 2), Wb.
    pub phi_zpf: f64,
}

pub fn lc_quantize(l: f64, c: f64) -> Result<OscillatorParams> {
    lc_quantize_with(l, c, &CODATA)
}

pub fn lc_quantize_with(l: f64, c: f64, k: &PhysicalConstants) -> Result<OscillatorParams> {
    positive("inductance", l)?;
    positive("capacitance", c)?;
    let z = (l / c).sqrt();
    Ok(OscillatorParams {
        l,
        c,
        omega: 1.0 / (l * c).sqrt(),
        z,
        z_reduced: z / k.resistance_quantum,
        q_zpf: (k.hbar / (2.0 * z)).sqrt(),
        phi_zpf: (k.hbar * z / 2.0).sqrt(),
    })
}

impl OscillatorParams {
    /// `Phi_zpf (a + a^dagger)` truncated to `n_levels`, in Wb.
    pub fn flux_operator(&self, n_levels: usize) -> Result<Operator> {
        let a = destroy::<f64>(n_levels)?;
        Ok((&a + &a.adjoint()).scale_real(self.phi_zpf))
    }

    /// `-i Q_zpf (a - a^dagger)` truncated to `n_levels`, in C.
    pub fn charge_operator(&self, n_levels: usize) -> Result<Operator> {
        let a = destroy::<f64>(n_levels)?;
        Ok((&a - &a.adjoint()).scale(Complex::new(0.0, -self.q_zpf)))
    }

    /// `hbar omega (a^dagger a + 1/2)`, in J.
    pub fn hamiltonian(&self, n_levels: usize) -> Result<Operator> {
        let a = destroy::<f64>(n_levels)?;
        let n = &a.adjoint() * &a;
        Ok(&n.scale_real(CODATA.hbar * self.omega) + &Operator::identity(n_levels).scale_real(0.5 * CODATA.hbar * self.omega))
    }
}

/// Distributed transmission line with open ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransmissionLineSpec {
    /// Inductance per length, H/m.
    pub ell: f64,
    /// Capacitance per length, F/m.
    pub cap: f64,
    /// m.
    pub length: f64,
    pub n_max: usize,
}

impl TransmissionLineSpec {
    pub fn validate(&self) -> Result<()> {
        positive("inductance per length", self.ell)?;
        positive("capacitance per length", self.cap)?;
        positive("length", self.length)?;
        if self.n_max == 0 {
            return Err(Error::Domain("n_max must be at least 1".into()));
        }
        Ok(())
    }

    pub fn phase_velocity(&self) -> f64 {
        1.0 / (self.ell * self.cap).sqrt()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TlineMode {
    pub n: usize,
    /// n pi / length, 1/m.
    pub k: f64,
    /// v_p k, rad/s.
    pub omega: f64,
    /// sqrt(2/length) cos(k x) on the caller's grid.
    pub phi: Vec<f64>,
}

/// Modes `n = 1..=n_max`; the zero mode is left out.
pub fn tline_modes(spec: &TransmissionLineSpec, grid: &[f64]) -> Result<Vec<TlineMode>> {
    spec.validate()?;
    let vp = spec.phase_velocity();
    let norm = (2.0 / spec.length).sqrt();
    Ok((1..=spec.n_max)
        .map(|n| {
            let k = n as f64 * PI / spec.length;
            TlineMode { n, k, omega: vp * k, phi: grid.iter().map(|&x| norm * (k * x).cos()).collect() }
        })
        .collect())
}

/// `Phi0 / (2 pi Ic cos phase)`, H. Negative past |phase| = pi/2.
pub fn josephson_inductance(ic: f64, phase: f64) -> Result<f64> {
    positive("critical current", ic)?;
    let c = phase.cos();
    if c.abs() < 1e-9 {
        return Err(Error::SingularInductance { phase });
    }
    Ok(CODATA.flux_quantum / (2.0 * PI * ic * c))
}

/// Cooper-pair box in the charge basis `N = -nmax..=nmax`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CpbParams {
    pub ec: f64,
    pub ej: f64,
    pub ng: f64,
    pub nmax: usize,
}

impl CpbParams {
    pub fn validate(&self) -> Result<()> {
        positive("EC", self.ec)?;
        if !(self.ej >= 0.0 && self.ej.is_finite()) {
            return Err(Error::Domain(format!("EJ must be finite and >= 0, got {}", self.ej)));
        }
        if !self.ng.is_finite() {
            return Err(Error::Domain("Ng must be finite".into()));
        }
        if self.nmax < 3 {
            return Err(Error::Domain(format!("charge cutoff nmax must be >= 3, got {}", self.nmax)));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        2 * self.nmax + 1
    }
}

/// Diagonal `4 EC (N - Ng)^2`, nearest-neighbour tunnelling `-EJ/2`.
pub fn cpb_hamiltonian(p: &CpbParams) -> Result<Operator> {
    p.validate()?;
    let nmax = p.nmax as f64;
    Ok(Operator::from_fn(p.dim(), |r, c| {
        if r == c {
            let n = r as f64 - nmax - p.ng;
            Complex::new(4.0 * p.ec * n * n, 0.0)
        } else if r.abs_diff(c) == 1 {
            Complex::new(-p.ej / 2.0, 0.0)
        } else {
            Complex::new(0.0, 0.0)
        }
    }))
}

/// Bands of the CPB over a gate-charge grid.
#[derive(Clone, Debug, PartialEq)]
pub struct BandTable {
    pub ng: Vec<f64>,
    /// `energies[i][k]`: level `k` at `ng[i]`, relative to `reference`.
    pub energies: Vec<Vec<f64>>,
    /// Minimum ground-state energy over the grid (absolute).
    pub reference: f64,
    /// Largest weight of the top requested band on the cutoff states `N = +-nmax`.
    pub cutoff_population: f64,
}

impl BandTable {
    /// Population threshold above which the charge cutoff is too small.
    pub const CUTOFF_TOL: f64 = 1e-8;

    pub fn cutoff_warning(&self) -> bool {
        self.cutoff_population > Self::CUTOFF_TOL
    }

    pub fn n_levels(&self) -> usize {
        self.energies.first().map_or(0, Vec::len)
    }
}

/// Sorted eigenvalues per `Ng` point (no adiabatic band tracking).
pub fn cpb_bands(p: &CpbParams, ng_grid: &[f64], n_levels: usize) -> Result<BandTable> {
    p.validate()?;
    if n_levels == 0 || n_levels > 2 * p.nmax {
        return Err(Error::Domain(format!(
            "n_levels must be in 1..={} for nmax = {}, got {n_levels}",
            2 * p.nmax,
            p.nmax
        )));
    }
    if ng_grid.is_empty() {
        return Err(Error::Domain("gate-charge grid is empty".into()));
    }
    let last = p.dim() - 1;
    let mut raw = Vec::with_capacity(ng_grid.len());
    let mut cutoff: f64 = 0.0;
    for &ng in ng_grid {
        let es = eig_hermitian(&cpb_hamiltonian(&CpbParams { ng, ..*p })?)?;
        let top = n_levels - 1;
        let w = es.vectors[(0, top)].norm_sqr() + es.vectors[(last, top)].norm_sqr();
        cutoff = cutoff.max(w);
        raw.push(es.values[..n_levels].to_vec());
    }
    let reference = raw.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min);
    let energies = raw.into_iter().map(|v| v.into_iter().map(|e| e - reference).collect()).collect();
    Ok(BandTable { ng: ng_grid.to_vec(), energies, reference, cutoff_population: cutoff })
}

/// Transmon (Duffing) reduction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransmonDerived {
    /// sqrt(8 EC EJ) - EC.
    pub omega_q: f64,
    /// (2 EC / EJ)^(1/4).
    pub phi_zpf: f64,
    /// (EJ / 32 EC)^(1/4).
    pub n_zpf: f64,
    /// Coefficient of b^dagger b^dagger b b, i.e. -EC/2.
    pub kerr: f64,
    pub ej_over_ec: f64,
}

impl TransmonDerived {
    /// Below EJ/EC = 10 the bosonic expansion is only indicative.
    pub fn reliable(&self) -> bool {
        self.ej_over_ec >= 10.0
    }
}

/// `H = omega_q b^dagger b - (EC/2) b^dagger b^dagger b b`, truncated to
/// `n_trunc` levels. Fails below EJ/EC = 5.
pub fn transmon_effective(ec: f64, ej: f64, n_trunc: usize) -> Result<(TransmonDerived, Operator)> {
    positive("EC", ec)?;
    positive("EJ", ej)?;
    let ratio = ej / ec;
    if ratio < 5.0 {
        return Err(Error::Regime(format!("transmon reduction needs EJ/EC >= 5, got {ratio}")));
    }
    let d = TransmonDerived {
        omega_q: (8.0 * ec * ej).sqrt() - ec,
        phi_zpf: (2.0 * ec / ej).powf(0.25),
        n_zpf: (ej / (32.0 * ec)).powf(0.25),
        kerr: -ec / 2.0,
        ej_over_ec: ratio,
    };
    let b = destroy::<f64>(n_trunc)?;
    let bd = create::<f64>(n_trunc)?;
    let n = &bd * &b;
    let kerr_op = &(&bd * &bd) * &(&b * &b);
    let h = &n.scale_real(d.omega_q) + &kerr_op.scale_real(d.kerr);
    Ok((d, h))
}

/// Three-junction flux qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FluxQubitParams {
    /// Small-junction ratio.
    pub alpha: f64,
    /// Gate-capacitance ratio (only enters the kinetic term).
    pub gamma_cap: f64,
    /// Phi_ext / Phi0.
    pub k: f64,
    pub ej: f64,
    /// Persistent current, A.
    pub ip: f64,
    /// Tunnelling strength, rad/s.
    pub tunnel_delta: f64,
}

impl FluxQubitParams {
    pub fn alpha_typical(&self) -> bool {
        (0.5..=1.0).contains(&self.alpha)
    }
}

/// `U/EJ = 2 + alpha - 2 cos(phi_+) cos(phi_-) - alpha cos(2 pi k + 2 phi_-)`.
pub fn flux_potential(p: &FluxQubitParams, phi_plus: f64, phi_minus: f64) -> f64 {
    2.0 * (1.0 - phi_plus.cos() * phi_minus.cos()) + p.alpha * (1.0 - (2.0 * PI * p.k + 2.0 * phi_minus).cos())
}

/// Bias energy `2 Ip Phi0 (k - 1/2)`, J.
pub fn flux_bias_energy(p: &FluxQubitParams) -> f64 {
    2.0 * p.ip * CODATA.flux_quantum * (p.k - 0.5)
}

/// `H = -1/2 [eps sigma_x + hbar Delta sigma_z]` with `eps` the bias energy; J.
/// The bias sits on `sigma_x` and the tunnelling on `sigma_z`.
pub fn flux_tls(p: &FluxQubitParams) -> Operator {
    let eps = flux_bias_energy(p);
    let tun = CODATA.hbar * p.tunnel_delta;
    (&pauli_x::<f64>().scale_real(eps) + &pauli_z::<f64>().scale_real(tun)).scale_real(-0.5)
}

/// rf-SQUID phase qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseQubitParams {
    /// 2 pi L Ic / Phi0.
    pub beta_l: f64,
    /// Phi_ext / Phi0.
    pub flux_bias: f64,
    pub ej: f64,
    /// rad/s.
    pub omega01: f64,
    /// Barrier height, J.
    pub barrier_du: f64,
    /// F.
    pub cap: f64,
    /// A.
    pub di_circ: f64,
}

impl PhaseQubitParams {
    /// `1 < beta_L < 4.6`.
    pub fn in_operating_range(&self) -> bool {
        self.beta_l > 1.0 && self.beta_l < 4.6
    }
}

/// `U/EJ = 1 - cos(phi) + (phi - 2 pi f)^2 / (2 beta_L)`.
pub fn phase_potential(p: &PhaseQubitParams, phi: f64) -> f64 {
    let x = phi - 2.0 * PI * p.flux_bias;
    1.0 - phi.cos() + x * x / (2.0 * p.beta_l)
}

/// `d(U/EJ)/dphi`.
pub fn phase_potential_slope(p: &PhaseQubitParams, phi: f64) -> f64 {
    phi.sin() + (phi - 2.0 * PI * p.flux_bias) / p.beta_l
}

/// `d^2(U/EJ)/dphi^2 = cos(phi) + 1/beta_L`.
pub fn phase_potential_curvature(p: &PhaseQubitParams, phi: f64) -> f64 {
    phi.cos() + 1.0 / p.beta_l
}

/// A local minimum of the washboard potential.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseWell {
    pub phi: f64,
    /// U/EJ at the minimum.
    pub depth: f64,
    pub curvature: f64,
}

/// Local minima of the potential inside `[lo, hi]`, located on a
/// `samples`-point grid and polished by Newton steps on the slope.
pub fn phase_wells(p: &PhaseQubitParams, lo: f64, hi: f64, samples: usize) -> Result<Vec<PhaseWell>> {
    positive("beta_L", p.beta_l)?;
    if !(hi > lo) || samples < 3 {
        return Err(Error::Domain("phase scan needs hi > lo and at least 3 samples".into()));
    }
    let h = (hi - lo) / (samples - 1) as f64;
    let u: Vec<f64> = (0..samples).map(|i| phase_potential(p, lo + h * i as f64)).collect();
    let mut wells = Vec::new();
    for i in 1..samples - 1 {
        if u[i] <= u[i - 1] && u[i] < u[i + 1] {
            let mut phi = lo + h * i as f64;
            for _ in 0..50 {
                let curv = phase_potential_curvature(p, phi);
                if curv <= 0.0 {
                    break;
                }
                let step = phase_potential_slope(p, phi) / curv;
                phi -= step.clamp(-h, h);
                if step.abs() < 1e-15 {
                    break;
                }
            }
            wells.push(PhaseWell { phi, depth: phase_potential(p, phi), curvature: phase_potential_curvature(p, phi) });
        }
    }
    Ok(wells)
}

/// Phase-qubit two-level Hamiltonian together with its longitudinal ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseTls {
    /// J.
    pub hamiltonian: Operator,
    /// sqrt(hbar omega01 / 3 dU).
    pub chi: f64,
}

/// `H = -1/2 [hbar w01 sigma_z + sqrt(hbar / 2 w01 C) dI (sigma_x + chi sigma_z)]`.
pub fn phase_tls(p: &PhaseQubitParams) -> Result<PhaseTls> {
    positive("omega01", p.omega01)?;
    positive("barrier height", p.barrier_du)?;
    positive("capacitance", p.cap)?;
    let hw = CODATA.hbar * p.omega01;
    let chi = (hw / (3.0 * p.barrier_du)).sqrt();
    let coupling = (CODATA.hbar / (2.0 * p.omega01 * p.cap)).sqrt() * p.di_circ;
    let sz = pauli_z::<f64>();
    let h = &(&sz.scale_real(hw) + &pauli_x::<f64>().scale_real(coupling)) + &sz.scale_real(coupling * chi);
    Ok(PhaseTls { hamiltonian: h.scale_real(-0.5), chi })
}
