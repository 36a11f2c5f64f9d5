// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;

use super::pulse::{PulseEnvelope, PulseKind};
use crate::error::{Error, Result};
use crate::opalg::Operator;
use crate::scalar::Real;

/// Time-dependent drive coefficient.
#[derive(Clone)]
pub enum Coefficient<T: Real> {
    Envelope(PulseEnvelope<T>),
    /// Arbitrary `t -> c(t)`; `bound` must dominate `|c(t)|` since it sets
    /// the integrator step.
    Function { f: Arc<dyn Fn(T) -> Complex<T> + Send + Sync>, bound: T },
}

impl<T: Real> Coefficient<T> {
    pub fn function(bound: T, f: impl Fn(T) -> Complex<T> + Send + Sync + 'static) -> Self {
        Coefficient::Function { f: Arc::new(f), bound }
    }

    pub fn eval(&self, t: T) -> Complex<T> {
        match self {
            Coefficient::Envelope(env) => env.eval(t),
            Coefficient::Function { f, .. } => f(t),
        }
    }

    pub fn bound(&self) -> T {
        match self {
            Coefficient::Envelope(env) => env.bound(),
            Coefficient::Function { bound, .. } => bound.abs(),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Coefficient::Envelope(env) if env.kind == PulseKind::Constant)
    }
}

impl<T: Real> fmt::Debug for Coefficient<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Envelope(env) => f.debug_tuple("Envelope").field(env).finish(),
            Coefficient::Function { bound, .. } => {
                f.debug_struct("Function").field("bound", bound).finish_non_exhaustive()
            }
        }
    }
}

impl<T: Real> From<PulseEnvelope<T>> for Coefficient<T> {
    fn from(env: PulseEnvelope<T>) -> Self {
        Coefficient::Envelope(env)
    }
}

/// Drive term contributing `c(t) O + (c(t) O)^dagger` to the Hamiltonian.
#[derive(Clone, Debug)]
pub struct DriveTerm<T: Real> {
    pub op: Operator<T>,
    pub coeff: Coefficient<T>,
}

/// Jump operator with its rate (>= 0).
#[derive(Clone, Debug)]
pub struct Channel<T: Real> {
    pub jump: Operator<T>,
    pub rate: T,
}

/// Lindblad problem statement: static Hamiltonian, drive terms and decay
/// channels, all sharing one dimension.
#[derive(Clone, Debug)]
pub struct LindbladModel<T: Real> {
    h_static: Operator<T>,
    drives: Vec<DriveTerm<T>>,
    channels: Vec<Channel<T>>,
}

impl<T: Real> LindbladModel<T> {
    /// Requires `h_static` Hermitian to 1e-9 (relative to `max(1, |h|_max)`).
    pub fn new(h_static: Operator<T>) -> Result<Self> {
        let defect = h_static.hermiticity_defect();
        let scale = h_static.max_abs().max(T::one());
        if defect > T::tolerance(1e-9) * scale {
            return Err(Error::NotHermitian { asymmetry: defect.as_f64() });
        }
        Ok(Self { h_static, drives: Vec::new(), channels: Vec::new() })
    }

    pub fn with_drive(mut self, op: Operator<T>, coeff: impl Into<Coefficient<T>>) -> Result<Self> {
        self.check_dim(&op)?;
        self.drives.push(DriveTerm { op, coeff: coeff.into() });
        Ok(self)
    }

    pub fn with_channel(mut self, jump: Operator<T>, rate: T) -> Result<Self> {
        self.check_dim(&jump)?;
        if !(rate >= T::zero()) || !rate.is_finite() {
            return Err(Error::Domain(format!("decay rate must be finite and >= 0, got {rate}")));
        }
        self.channels.push(Channel { jump, rate });
        Ok(self)
    }

    fn check_dim(&self, op: &Operator<T>) -> Result<()> {
        if op.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: op.dim() });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.h_static.dim()
    }

    pub fn h_static(&self) -> &Operator<T> {
        &self.h_static
    }

    pub fn drives(&self) -> &[DriveTerm<T>] {
        &self.drives
    }

    pub fn channels(&self) -> &[Channel<T>] {
        &self.channels
    }

    pub fn is_time_dependent(&self) -> bool {
        self.drives.iter().any(|d| !d.coeff.is_constant())
    }

    /// `H(t) = h_static + sum_k (c_k(t) O_k + h.c.)`.
    pub fn hamiltonian(&self, t: T) -> Operator<T> {
        let mut h = self.h_static.clone();
        for d in &self.drives {
            let c = d.coeff.eval(t);
            if c.re == T::zero() && c.im == T::zero() {
                continue;
            }
            let n = h.dim();
            for r in 0..n {
                for col in 0..n {
                    h[(r, col)] = h[(r, col)] + c * d.op[(r, col)] + (c * d.op[(col, r)]).conj();
                }
            }
        }
        h
    }

    /// Fastest rate in the model: the largest static Hamiltonian entry,
    /// bound on a drive entry, or channel rate (times the largest jump
    /// entry squared).
    pub fn omega_max(&self) -> T {
        let mut w = self.h_static.max_abs();
        for d in &self.drives {
            let n = d.op.dim();
            let mut entry = T::zero();
            for r in 0..n {
                for col in 0..n {
                    entry = entry.max(d.op[(r, col)].norm() + d.op[(col, r)].norm());
                }
            }
            w = w.max(entry * d.coeff.bound());
        }
        for c in &self.channels {
            let j = c.jump.max_abs();
            w = w.max(c.rate * j * j);
        }
        w
    }
}
