// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by builders, solvers and protocol runners.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} exceeds the configured maximum {max}")]
    Capacity { dim: usize, max: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("operator is not Hermitian (max asymmetry {asymmetry:e})")]
    NotHermitian { asymmetry: f64 },

    #[error("{0} did not converge")]
    NoConvergence(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular Josephson inductance at phase {phase} rad (cos phase ~ 0)")]
    SingularInductance { phase: f64 },

    #[error("parameter regime error: {0}")]
    Regime(String),

    #[error("integration failed at t = {time:e}: {reason}")]
    IntegrationFailure { time: f64, reason: String },

    #[error("steady state is not unique: null-space dimension {nullity}")]
    SteadyStateMultiplicity { nullity: usize },

    #[error("steady state requested for a time-dependent model")]
    TimeDependentModel,

    #[error("no steady state: {0}")]
    NoSteadyState(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("mixing angle undefined at t = {time:e}: both envelopes vanish")]
    UndefinedAngle { time: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
