// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Open-system dynamics.
//!
//! All quantities are dimensionless with hbar = 1: Hamiltonians are angular
//! frequencies in whatever unit the caller picked, times are in the inverse
//! unit. The master equation is
//!
//! ```text
//! drho/dt = -i[H(t), rho] + sum_i gamma_i/2 (2 L_i rho L_i^dagger - {L_i^dagger L_i, rho})
//! ```
//!
//! so a channel with rate `gamma` depopulates its upper level at rate
//! `gamma` (the common "gamma D[L]" convention with the same number).
//!
//! Superoperators use column stacking: `rho[(r, c)]` maps to index
//! `c * dim + r`.

mod evolve;
mod liouvillian;
mod model;
mod pulse;
mod steady;

pub use evolve::{evolve, evolve_with, EvolveOptions, Trajectory};
pub use liouvillian::{apply_generator, liouvillian};
pub use model::{Channel, Coefficient, DriveTerm, LindbladModel};
pub use pulse::{pulse_eval, PulseEnvelope, PulseKind};
pub use steady::steady_state;
