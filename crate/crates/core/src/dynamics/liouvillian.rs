// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex;

use super::model::LindbladModel;
use crate::error::Result;
use crate::opalg::Operator;
use crate::scalar::Real;

/// `K = -i H - 1/2 sum gamma L^dagger L`, so that the generator reads
/// `K rho + rho K^dagger + sum gamma L rho L^dagger`.
pub(crate) fn effective_generator<T: Real>(model: &LindbladModel<T>, h: &Operator<T>) -> Operator<T> {
    let mut k = h.scale(Complex::new(T::zero(), -T::one()));
    let half = T::lit(0.5);
    for ch in model.channels() {
        if ch.rate == T::zero() {
            continue;
        }
        let ldl = &ch.jump.adjoint() * &ch.jump;
        k.add_scaled(Complex::new(-half * ch.rate, T::zero()), &ldl);
    }
    k
}

/// Superoperator of the master equation at time `t`, column stacked.
pub fn liouvillian<T: Real>(model: &LindbladModel<T>, t: T) -> Result<Operator<T>> {
    let d = model.dim();
    let h = model.hamiltonian(t);
    let k = effective_generator(model, &h);
    let mut s = Operator::zeros(d * d);
    let idx = |r: usize, c: usize| c * d + r;
    for i in 0..d {
        for j in 0..d {
            let row = idx(i, j);
            for m in 0..d {
                // K rho: rho[(m, j)] contributes K[(i, m)]
                s[(row, idx(m, j))] = s[(row, idx(m, j))] + k[(i, m)];
                // rho K^dagger: rho[(i, m)] contributes conj(K[(j, m)])
                s[(row, idx(i, m))] = s[(row, idx(i, m))] + k[(j, m)].conj();
            }
        }
    }
    for ch in model.channels() {
        if ch.rate == T::zero() {
            continue;
        }
        let l = &ch.jump;
        let g = Complex::new(ch.rate, T::zero());
        for i in 0..d {
            for j in 0..d {
                let row = idx(i, j);
                for a in 0..d {
                    let lia = l[(i, a)];
                    if lia.re == T::zero() && lia.im == T::zero() {
                        continue;
                    }
                    for b in 0..d {
                        s[(row, idx(a, b))] = s[(row, idx(a, b))] + g * lia * l[(j, b)].conj();
                    }
                }
            }
        }
    }
    Ok(s)
}

/// Applies the master-equation generator directly to `rho` (no superoperator).
pub fn apply_generator<T: Real>(model: &LindbladModel<T>, t: T, rho: &Operator<T>) -> Operator<T> {
    let k = effective_generator(model, &model.hamiltonian(t));
    generator_with(&k, model, rho)
}

pub(crate) fn generator_with<T: Real>(k: &Operator<T>, model: &LindbladModel<T>, rho: &Operator<T>) -> Operator<T> {
    let mut out = k * rho;
    out += &(rho * &k.adjoint());
    for ch in model.channels() {
        if ch.rate == T::zero() {
            continue;
        }
        let lr = &ch.jump * rho;
        let lrl = &lr * &ch.jump.adjoint();
        out.add_scaled(Complex::new(ch.rate, T::zero()), &lrl);
    }
    out
}
