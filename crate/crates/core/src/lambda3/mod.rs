// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! The engineered Lambda system: EIT/ATS probe response and STIRAP.
//!
//! Two basis orderings appear. The EIT model uses `(|1>, |2>, |3>)` with
//! `|3>` the excited state; the STIRAP Hamiltonian uses `(|1>, |3>, |2>)`
//! so that the intermediate state sits in the middle of the matrix.

mod eit;
mod stirap;

pub use eit::{
    chi_from_rho31, eit_chi1, eit_chi1_partial_fractions, eit_chi1_weak_probe, eit_model, eit_numeric_point,
    eit_numeric_spectrum, eit_poles, eit_residues, EitPoint, EitPoles, LambdaDecays, ProbeControlSpec, Regime,
};
pub use stirap::{
    cd_amplitude, cd_amplitude_exact, dark_state, mixing_angle, run_protocol, stirap_hamiltonian, stirap_model,
    MixingAngle, StirapConfig, StirapRun,
};
