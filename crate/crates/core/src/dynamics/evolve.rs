// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use num_complex::Complex;

use super::liouvillian::{effective_generator, generator_with};
use super::model::LindbladModel;
use crate::error::{Error, Result};
use crate::opalg::{eig_hermitian, expect, Operator};
use crate::scalar::Real;

const TRACE_TOL: f64 = 1e-6;
const HERMITIAN_TOL: f64 = 1e-8;
const POSITIVITY_TOL: f64 = 1e-6;

/// Integrator settings.
#[derive(Clone, Debug)]
pub struct EvolveOptions<T: Real> {
    /// The step never exceeds `1 / (step_factor * omega_max)`.
    pub step_factor: T,
    /// Optional absolute cap on the step.
    pub max_step: Option<T>,
    /// Named observables recorded as `Re Tr(O rho)` at every output time.
    pub observables: Vec<(String, Operator<T>)>,
}

impl<T: Real> Default for EvolveOptions<T> {
    fn default() -> Self {
        Self { step_factor: T::lit(50.0), max_step: None, observables: Vec::new() }
    }
}

/// Output of [`evolve`]: states at the requested times plus observables.
#[derive(Clone, Debug)]
pub struct Trajectory<T: Real> {
    pub times: Vec<T>,
    pub states: Vec<Operator<T>>,
    pub observables: BTreeMap<String, Vec<T>>,
    /// Total number of RK4 steps taken.
    pub steps: usize,
}

impl<T: Real> Trajectory<T> {
    /// `Re <k|rho(t)|k>` for every output time.
    pub fn population(&self, k: usize) -> Vec<T> {
        self.states.iter().map(|r| r[(k, k)].re).collect()
    }

    pub fn final_state(&self) -> &Operator<T> {
        self.states.last().expect("trajectory holds at least one state")
    }
}

/// Integrates the master equation with default options.
pub fn evolve<T: Real>(model: &LindbladModel<T>, rho0: &Operator<T>, times: &[T]) -> Result<Trajectory<T>> {
    evolve_with(model, rho0, times, &EvolveOptions::default())
}

/// Fixed-step RK4 on `rho`. Each output interval is split into equal
/// substeps no longer than `min(dt, max_step, 1/(step_factor omega_max))`.
/// States are checked at every output time; a violation of the trace,
/// Hermiticity or positivity thresholds aborts with the offending time.
pub fn evolve_with<T: Real>(
    model: &LindbladModel<T>,
    rho0: &Operator<T>,
    times: &[T],
    opts: &EvolveOptions<T>,
) -> Result<Trajectory<T>> {
    if rho0.dim() != model.dim() {
        return Err(Error::DimensionMismatch { expected: model.dim(), found: rho0.dim() });
    }
    if times.is_empty() {
        return Err(Error::Domain("time grid is empty".into()));
    }
    if times.iter().any(|t| !t.is_finite()) || times.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("times must be finite and strictly increasing".into()));
    }
    for (name, op) in &opts.observables {
        if op.dim() != model.dim() {
            return Err(Error::Domain(format!("observable '{name}' has dimension {}", op.dim())));
        }
    }
    if !(opts.step_factor > T::zero()) {
        return Err(Error::Domain("step factor must be positive".into()));
    }
    if let Some(reason) = check_state(rho0) {
        return Err(Error::Domain(format!("initial state is not a density matrix: {reason}")));
    }

    let wmax = model.omega_max();
    let mut hmax = if wmax > T::zero() { T::one() / (opts.step_factor * wmax) } else { T::infinity() };
    if let Some(cap) = opts.max_step {
        hmax = hmax.min(cap);
    }
    let static_k = (!model.is_time_dependent()).then(|| effective_generator(model, &model.hamiltonian(times[0])));
    let rhs = |t: T, rho: &Operator<T>| -> Operator<T> {
        match &static_k {
            Some(k) => generator_with(k, model, rho),
            None => generator_with(&effective_generator(model, &model.hamiltonian(t)), model, rho),
        }
    };

    let mut observables: BTreeMap<String, Vec<T>> =
        opts.observables.iter().map(|(n, _)| (n.clone(), Vec::with_capacity(times.len()))).collect();
    let mut states = Vec::with_capacity(times.len());
    let record = |rho: &Operator<T>, obs: &mut BTreeMap<String, Vec<T>>| {
        for (name, op) in &opts.observables {
            let v = expect(op, rho).map(|z| z.re).unwrap_or(T::nan());
            obs.get_mut(name).unwrap().push(v);
        }
    };

    let two = T::lit(2.0);
    let six = T::lit(6.0);
    let mut rho = rho0.clone();
    let mut steps = 0usize;
    record(&rho, &mut observables);
    states.push(rho.clone());
    for w in times.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        let dt = t1 - t0;
        let n = if hmax.is_finite() { (dt / hmax).ceil().to_usize().unwrap_or(1).max(1) } else { 1 };
        let h = dt / T::from_usize(n).unwrap();
        let half = Complex::new(h / two, T::zero());
        let full = Complex::new(h, T::zero());
        for s in 0..n {
            let t = t0 + h * T::from_usize(s).unwrap();
            let k1 = rhs(t, &rho);
            let mut y = rho.clone();
            y.add_scaled(half, &k1);
            let k2 = rhs(t + h / two, &y);
            let mut y = rho.clone();
            y.add_scaled(half, &k2);
            let k3 = rhs(t + h / two, &y);
            let mut y = rho.clone();
            y.add_scaled(full, &k3);
            let k4 = rhs(t + h, &y);
            let c1 = Complex::new(h / six, T::zero());
            let c2 = Complex::new(h / T::lit(3.0), T::zero());
            rho.add_scaled(c1, &k1);
            rho.add_scaled(c2, &k2);
            rho.add_scaled(c2, &k3);
            rho.add_scaled(c1, &k4);
        }
        steps += n;
        if let Some(reason) = check_state(&rho) {
            return Err(Error::IntegrationFailure { time: t1.as_f64(), reason });
        }
        record(&rho, &mut observables);
        states.push(rho.clone());
    }
    Ok(Trajectory { times: times.to_vec(), states, observables, steps })
}

/// Returns a description of the first violated density-matrix invariant.
fn check_state<T: Real>(rho: &Operator<T>) -> Option<String> {
    if let Some((r, c)) = rho.find_non_finite() {
        return Some(format!("non-finite entry at ({r}, {c})"));
    }
    let tr = rho.trace();
    let trace_err = ((tr.re - T::one()).powi(2) + tr.im.powi(2)).sqrt();
    if trace_err > T::tolerance(TRACE_TOL) {
        return Some(format!("trace {} deviates from 1", tr.re));
    }
    let asym = rho.hermiticity_defect();
    if asym > T::tolerance(HERMITIAN_TOL) {
        return Some(format!("Hermiticity defect {asym}"));
    }
    let sym = (rho + &rho.adjoint()).scale_real(T::lit(0.5));
    match eig_hermitian(&sym) {
        Ok(es) if es.values[0] < -T::tolerance(POSITIVITY_TOL) => {
            Some(format!("negative eigenvalue {}", es.values[0]))
        }
        Ok(_) => None,
        Err(e) => Some(e.to_string()),
    }
}
