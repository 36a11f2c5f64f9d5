// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use cqed_core::Error as CoreError;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    /// Bad inputs (including those only the library can judge) map to 2;
    /// failures inside a solver or while writing map to 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Core(e) => match e {
                CoreError::InvalidDimension(_)
                | CoreError::DimensionMismatch { .. }
                | CoreError::Capacity { .. }
                | CoreError::NonFinite { .. }
                | CoreError::NotHermitian { .. }
                | CoreError::Domain(_)
                | CoreError::SingularInductance { .. }
                | CoreError::Regime(_)
                | CoreError::Precondition(_) => EXIT_CONFIG,
                _ => EXIT_SOLVER,
            },
            CliError::Output(_) => EXIT_SOLVER,
        }
    }
}
