// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Numerical laboratory for superconducting circuit QED.
//!
//! The crate is layered bottom-up:
//!
//! * [`opalg`]: dense complex operators, ladder/Pauli builders, Kronecker
//!   products, a Hermitian eigensolver and expectation values.
//! * [`dynamics`]: Lindblad models with pulsed drives, the Liouvillian
//!   superoperator, a fixed-step RK4 integrator and a steady-state solver.
//! * [`circuits`]: LC oscillators, transmission lines, Josephson junctions,
//!   Cooper-pair box / transmon, flux and phase qubits.
//! * [`twolevel`]: closed-form driven two-level results.
//! * [`jcm`]: Jaynes-Cummings Hamiltonians, dressed doublets, dispersive
//!   energies and the doubly-dressed polariton basis.
//! * [`lambda3`]: EIT/ATS susceptibility and STIRAP/saSTIRAP protocols in
//!   the engineered Lambda system.
//!
//! `opalg` and `dynamics` are generic over the scalar type ([`Real`]); the
//! aliases below pin them to `f64`, which is what the physics layers use.

pub mod circuits;
pub mod constants;
pub mod dynamics;
mod error;
pub mod jcm;
pub mod lambda3;
pub mod opalg;
mod scalar;
pub mod twolevel;

pub use error::{Error, Result};
pub use num_complex::Complex;
pub use scalar::Real;

/// Complex scalar in double precision.
pub type C64 = Complex<f64>;

/// Double-precision dense operator.
pub type Operator = opalg::Operator<f64>;
/// Single-precision dense operator.
pub type OperatorF32 = opalg::Operator<f32>;
/// Double-precision eigendecomposition.
pub type EigenSystem = opalg::EigenSystem<f64>;
/// Double-precision Lindblad model.
pub type LindbladModel = dynamics::LindbladModel<f64>;
/// Single-precision Lindblad model.
pub type LindbladModelF32 = dynamics::LindbladModel<f32>;
/// Double-precision trajectory.
pub type Trajectory = dynamics::Trajectory<f64>;
/// Double-precision pulse envelope.
pub type PulseEnvelope = dynamics::PulseEnvelope<f64>;
