// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Jaynes-Cummings model, dressed states and doubly-dressed polaritons.
//!
//! Units: hbar = 1, every frequency in one caller-chosen unit. Basis
//! ordering is qubit (slow) times cavity (fast): `|q, n>` sits at index
//! `q * n_cav + n` with `q = 0` for `|g>` and `q = 1` for `|e>`. The qubit
//! operator in the Hamiltonians is the inversion `|e><e| - |g><g|`.
//!
//! Dispersive shift: `chi = g^2 / (omega_r - omega_q)`. With this sign the
//! dispersive energies, polariton splittings and nesting window below agree
//! with exact diagonalization up to the `(g/Delta)^3` remainder; the nesting
//! window is non-empty for `omega_q < omega_r`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::opalg::{destroy, eig_hermitian, inner, inversion, kron, number, sigma_minus};
use crate::{Operator, C64};

/// Above this `|g/Delta|` the dispersive expansion is refused.
pub const DISPERSIVE_LIMIT: f64 = 0.1;
/// Above this `|g/Delta|` results carry a reliability warning.
pub const DISPERSIVE_WARN: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JcmParams {
    pub omega_r: f64,
    pub omega_q: f64,
    pub g: f64,
    pub n_cav: usize,
}

impl JcmParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_cav < 3 {
            return Err(Error::Domain(format!("cavity truncation must be >= 3, got {}", self.n_cav)));
        }
        if !(self.g >= 0.0 && self.g.is_finite()) {
            return Err(Error::Domain(format!("coupling g must be finite and >= 0, got {}", self.g)));
        }
        if !self.omega_r.is_finite() || !self.omega_q.is_finite() {
            return Err(Error::Domain("frequencies must be finite".into()));
        }
        Ok(())
    }

    /// `omega_q - omega_r`.
    pub fn delta(&self) -> f64 {
        self.omega_q - self.omega_r
    }

    /// `g^2 / (omega_r - omega_q)`.
    pub fn chi(&self) -> f64 {
        self.g * self.g / (self.omega_r - self.omega_q)
    }

    /// `|g / Delta|`.
    pub fn dispersive_ratio(&self) -> f64 {
        (self.g / self.delta()).abs()
    }

    fn check_dispersive(&self) -> Result<()> {
        if self.delta() == 0.0 {
            return Err(Error::Regime("dispersive expansion needs a nonzero detuning".into()));
        }
        let r = self.dispersive_ratio();
        if r > DISPERSIVE_LIMIT {
            return Err(Error::Regime(format!(
                "dispersive expansion needs |g/Delta| <= {DISPERSIVE_LIMIT}, got {r}"
            )));
        }
        Ok(())
    }

    /// Full-space index of `|q, n>`.
    pub fn index(&self, excited: bool, n: usize) -> usize {
        usize::from(excited) * self.n_cav + n
    }
}

/// Qubit drive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DriveSpec {
    pub omega_d: f64,
    /// Drive Rabi strength.
    pub big_omega_d: f64,
}

impl DriveSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.big_omega_d >= 0.0 && self.big_omega_d.is_finite()) || !self.omega_d.is_finite() {
            return Err(Error::Domain("drive strength must be finite and >= 0".into()));
        }
        Ok(())
    }
}

fn ladder(p: &JcmParams) -> Result<(Operator, Operator, Operator, Operator)> {
    let a = kron(&Operator::identity(2), &destroy(p.n_cav)?)?;
    let sm = kron(&sigma_minus(), &Operator::identity(p.n_cav))?;
    let sz = kron(&inversion(), &Operator::identity(p.n_cav))?;
    let n = kron(&Operator::identity(2), &number(p.n_cav)?)?;
    Ok((a, sm, sz, n))
}

fn jc_with(p: &JcmParams, wr: f64, wq: f64) -> Result<Operator> {
    p.validate()?;
    let (a, sm, sz, n) = ladder(p)?;
    let sp = sm.adjoint();
    let coupling = &(&sp * &a) + &(&sm * &a.adjoint());
    let mut h = n.scale_real(wr);
    h += &sz.scale_real(wq / 2.0);
    h += &coupling.scale_real(p.g);
    Ok(h)
}

/// `omega_r a^dagger a + (omega_q/2) sigma_z + g (sigma_+ a + sigma_- a^dagger)`.
pub fn jc_hamiltonian(p: &JcmParams) -> Result<Operator> {
    jc_with(p, p.omega_r, p.omega_q)
}

/// Total excitation number `a^dagger a + |e><e|`.
pub fn excitation_number(n_cav: usize) -> Result<Operator> {
    let n = kron(&Operator::identity(2), &number(n_cav)?)?;
    let e = kron(&Operator::projector(2, 1), &Operator::identity(n_cav))?;
    Ok(&n + &e)
}

/// Dressed doublet of the `{|e,n>, |g,n+1>}` manifold.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Doublet {
    pub e_plus: f64,
    pub e_minus: f64,
    /// Mixing angle in `[0, pi]`.
    pub theta: f64,
    /// `sqrt(Delta^2 + 4 g^2 (n+1))`.
    pub rabi: f64,
    /// `|n,+>` as amplitudes on `(|e,n>, |g,n+1>)`.
    pub plus: [f64; 2],
    /// `|n,->` on the same basis.
    pub minus: [f64; 2],
}

/// `E_pm = (n + 1/2) omega_r +- Omega_n / 2`, `theta_n = atan2(Omega_n(0), Delta)`.
pub fn jc_doublet(n: usize, omega_r: f64, delta: f64, g: f64) -> Doublet {
    let np1 = (n + 1) as f64;
    let rabi0 = 2.0 * g * np1.sqrt();
    let rabi = delta.hypot(rabi0);
    let theta = rabi0.atan2(delta);
    let (s, c) = (theta / 2.0).sin_cos();
    let mid = (n as f64 + 0.5) * omega_r;
    Doublet { e_plus: mid + rabi / 2.0, e_minus: mid - rabi / 2.0, theta, rabi, plus: [c, s], minus: [-s, c] }
}

/// The `2x2` block `[[n w_r + w_q/2, g sqrt(n+1)], [g sqrt(n+1), (n+1) w_r - w_q/2]]`.
pub fn doublet_block(n: usize, omega_r: f64, omega_q: f64, g: f64) -> Operator {
    let c = g * ((n + 1) as f64).sqrt();
    let nf = n as f64;
    Operator::from_real_rows(&[
        vec![nf * omega_r + omega_q / 2.0, c],
        vec![c, (nf + 1.0) * omega_r - omega_q / 2.0],
    ])
    .expect("2x2 block is well formed")
}

/// Dispersive energies in the frame of `omega_d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DispersiveLevels {
    /// `n (w~_r + chi) + Delta/2`.
    pub omega_g: f64,
    /// `n (w~_r - chi) + (w~_q - chi) + Delta/2`.
    pub omega_e: f64,
    pub chi: f64,
    /// `|g/Delta|` above [`DISPERSIVE_WARN`].
    pub warn: bool,
}

/// `omega_{g,n}`, `omega_{e,n}` and `chi`. Both energies share the constant
/// offset `Delta/2`; only differences are physical.
pub fn dispersive_energies(p: &JcmParams, omega_d: f64, n: usize) -> Result<DispersiveLevels> {
    p.validate()?;
    p.check_dispersive()?;
    let chi = p.chi();
    let (wr, wq) = (p.omega_r - omega_d, p.omega_q - omega_d);
    let nf = n as f64;
    let off = p.delta() / 2.0;
    Ok(DispersiveLevels {
        omega_g: nf * (wr + chi) + off,
        omega_e: nf * (wr - chi) + (wq - chi) + off,
        chi,
        warn: p.dispersive_ratio() > DISPERSIVE_WARN,
    })
}

/// Rotating-frame Hamiltonian
/// `w~_r a^dagger a + (w~_q/2) sigma_z + g (sigma_+ a + sigma_- a^dagger) + Omega_d (sigma_- + sigma_+)`.
pub fn driven_rotating_hamiltonian(p: &JcmParams, d: &DriveSpec) -> Result<Operator> {
    d.validate()?;
    let mut h = jc_with(p, p.omega_r - d.omega_d, p.omega_q - d.omega_d)?;
    let (_, sm, _, _) = ladder(p)?;
    h += &(&sm + &sm.adjoint()).scale_real(d.big_omega_d);
    Ok(h)
}

/// Doubly-dressed polariton states.
#[derive(Clone, Debug, PartialEq)]
pub struct PolaritonBasis {
    pub chi: f64,
    pub theta_l: f64,
    pub theta_u: f64,
    pub omega_21: f64,
    pub omega_43: f64,
    /// `|1>..|4>` on `(|g,0>, |e,0>, |g,1>, |e,1>)`.
    pub states: [[f64; 4]; 4],
    /// `omega_q - 3 chi < omega_d < omega_q - chi`.
    pub nested: bool,
    pub window: (f64, f64),
    pub warn: bool,
}

impl PolaritonBasis {
    /// State `k` (0-based) embedded in the full JC space.
    pub fn embed(&self, p: &JcmParams, k: usize) -> Vec<C64> {
        let mut v = vec![Complex::new(0.0, 0.0); 2 * p.n_cav];
        let slots = [p.index(false, 0), p.index(true, 0), p.index(false, 1), p.index(true, 1)];
        for (slot, &amp) in slots.iter().zip(&self.states[k]) {
            v[*slot] = Complex::new(amp, 0.0);
        }
        v
    }
}

/// Dispersive-limit construction of the polariton states. Outside the
/// nesting window the basis is still returned with `nested = false`.
pub fn polariton_basis(p: &JcmParams, d: &DriveSpec) -> Result<PolaritonBasis> {
    p.validate()?;
    d.validate()?;
    p.check_dispersive()?;
    let chi = p.chi();
    let wq = p.omega_q - d.omega_d;
    let od = d.big_omega_d;
    let theta_l = (2.0 * od).atan2(wq - chi);
    let theta_u = (2.0 * od).atan2(-wq + 3.0 * chi);
    let (sl, cl) = (theta_l / 2.0).sin_cos();
    let (su, cu) = (theta_u / 2.0).sin_cos();
    let window = (p.omega_q - 3.0 * chi, p.omega_q - chi);
    Ok(PolaritonBasis {
        chi,
        theta_l,
        theta_u,
        omega_21: (wq - chi).hypot(2.0 * od),
        omega_43: (wq - 3.0 * chi).hypot(2.0 * od),
        states: [
            [cl, -sl, 0.0, 0.0],
            [sl, cl, 0.0, 0.0],
            [0.0, 0.0, -su, cu],
            [0.0, 0.0, cu, su],
        ],
        nested: window.0 < d.omega_d && d.omega_d < window.1,
        window,
        warn: p.dispersive_ratio() > DISPERSIVE_WARN,
    })
}

/// Numeric counterpart of [`polariton_basis`] splittings.
#[derive(Clone, Debug, PartialEq)]
pub struct PolaritonCrossCheck {
    /// Eigenvalues of the projected `4x4` problem, ascending.
    pub eigenvalues: [f64; 4],
    pub omega_21: f64,
    pub omega_43: f64,
    /// `max(|omega_21 - analytic|, |omega_43 - analytic|)`.
    pub deviation: f64,
}

/// Diagonalizes the driven Hamiltonian restricted to the four exact
/// undriven dressed states continuously connected to `|g,0>, |e,0>,
/// |g,1>, |e,1>`.
pub fn polariton_cross_check(p: &JcmParams, d: &DriveSpec) -> Result<PolaritonCrossCheck> {
    let analytic = polariton_basis(p, d)?;
    let undriven = driven_rotating_hamiltonian(p, &DriveSpec { big_omega_d: 0.0, ..*d })?;
    let driven = driven_rotating_hamiltonian(p, d)?;
    let es = eig_hermitian(&undriven)?;
    let targets = [p.index(false, 0), p.index(true, 0), p.index(false, 1), p.index(true, 1)];
    let mut picked: Vec<Vec<C64>> = Vec::with_capacity(4);
    for &t in &targets {
        let k = (0..es.len())
            .max_by(|&i, &j| es.vectors[(t, i)].norm().total_cmp(&es.vectors[(t, j)].norm()))
            .expect("non-empty spectrum");
        let mut v = es.vector(k);
        // dominant component positive
        let ph = v[t].conj() / v[t].norm();
        v.iter_mut().for_each(|z| *z *= ph);
        picked.push(v);
    }
    let block = Operator::from_fn(4, |r, c| inner(&picked[r], &driven.apply(&picked[c])));
    let sym = (&block + &block.adjoint()).scale_real(0.5);
    let ev = eig_hermitian(&sym)?.values;
    let eigenvalues = [ev[0], ev[1], ev[2], ev[3]];
    let omega_21 = ev[1] - ev[0];
    let omega_43 = ev[3] - ev[2];
    let deviation = (omega_21 - analytic.omega_21).abs().max((omega_43 - analytic.omega_43).abs());
    Ok(PolaritonCrossCheck { eigenvalues, omega_21, omega_43, deviation })
}
