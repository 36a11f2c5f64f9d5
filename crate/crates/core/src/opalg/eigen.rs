// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense Hermitian eigensolver.
//!
//! Householder reduction to Hermitian tridiagonal form, a diagonal phase
//! transform to a real symmetric tridiagonal matrix, then implicit QL with
//! Wilkinson-style shifts. Eigenvalues come back ascending; each eigenvector
//! is rephased so its largest-magnitude component is real and positive
//! (first such component on ties).

use num_complex::Complex;

use super::Operator;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors,
/// stored as the columns of `vectors`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSystem<T: Real> {
    pub values: Vec<T>,
    pub vectors: Operator<T>,
}

impl<T: Real> EigenSystem<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Eigenvector `k` as a ket.
    pub fn vector(&self, k: usize) -> Vec<Complex<T>> {
        (0..self.vectors.dim()).map(|r| self.vectors[(r, k)]).collect()
    }
}

/// Diagonalizes a Hermitian operator.
///
/// The input must satisfy `max|h - h^dagger| <= 1e-9 * max|h|`; its Hermitian
/// part is what gets diagonalized.
pub fn eig_hermitian<T: Real>(h: &Operator<T>) -> Result<EigenSystem<T>> {
    let n = h.dim();
    let asym = h.hermiticity_defect();
    if asym > T::tolerance(1e-9) * h.max_abs() {
        return Err(Error::NotHermitian { asymmetry: asym.as_f64() });
    }

    let half = T::lit(0.5);
    let mut a: Vec<Complex<T>> = (0..n * n)
        .map(|k| {
            let (r, c) = (k / n, k % n);
            (h[(r, c)] + h[(c, r)].conj()) * half
        })
        .collect();
    let mut q: Vec<Complex<T>> = Operator::<T>::identity(n).into_vec();

    tridiagonalize(&mut a, &mut q, n);

    // Phase transform D^dagger T D with real positive sub-diagonal.
    let mut diag: Vec<T> = (0..n).map(|k| a[k * n + k].re).collect();
    let mut off = vec![T::zero(); n];
    let mut phase = vec![Complex::new(T::one(), T::zero()); n];
    for k in 0..n.saturating_sub(1) {
        let s = a[(k + 1) * n + k];
        let mag = s.norm();
        off[k] = mag;
        phase[k + 1] = if mag > T::zero() { phase[k] * (s / mag) } else { phase[k] };
    }

    let mut z = vec![T::zero(); n * n];
    for i in 0..n {
        z[i * n + i] = T::one();
    }
    tql2(&mut diag, &mut off, &mut z, n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap_or(std::cmp::Ordering::Equal));

    let zero = Complex::new(T::zero(), T::zero());
    let mut vectors = Operator::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        let mut v: Vec<Complex<T>> = (0..n)
            .map(|r| {
                (0..n).fold(zero, |acc, k| acc + q[r * n + k] * phase[k] * z[k * n + src])
            })
            .collect();
        fix_phase(&mut v);
        for (r, x) in v.into_iter().enumerate() {
            vectors[(r, col)] = x;
        }
    }
    let values = order.iter().map(|&k| diag[k]).collect();
    Ok(EigenSystem { values, vectors })
}

/// Rotates `v` so that its largest-magnitude component is real positive.
pub(crate) fn fix_phase<T: Real>(v: &mut [Complex<T>]) {
    let mut best = 0;
    let mut best_mag = T::zero();
    for (k, x) in v.iter().enumerate() {
        let m = x.norm();
        if m > best_mag {
            best = k;
            best_mag = m;
        }
    }
    if best_mag > T::zero() {
        let rot = v[best].conj() / best_mag;
        for x in v.iter_mut() {
            *x = *x * rot;
        }
        v[best] = Complex::new(v[best].re, T::zero());
    }
}

/// In-place Householder reduction of a Hermitian row-major matrix.
/// Accumulates `q` so that `a_in = q * a_out * q^dagger`.
fn tridiagonalize<T: Real>(a: &mut [Complex<T>], q: &mut [Complex<T>], n: usize) {
    let zero = Complex::new(T::zero(), T::zero());
    let two = T::lit(2.0);
    let mut v = vec![zero; n];
    let mut p = vec![zero; n];
    for k in 0..n.saturating_sub(2) {
        let tail: T = (k + 2..n).map(|i| a[i * n + k].norm_sqr()).sum();
        if tail == T::zero() {
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let alpha = (tail + x0.norm_sqr()).sqrt();
        let x0_mag = x0.norm();
        let ph = if x0_mag > T::zero() { x0 / x0_mag } else { Complex::new(T::one(), T::zero()) };

        v.iter_mut().for_each(|x| *x = zero);
        for i in k + 1..n {
            v[i] = a[i * n + k];
        }
        v[k + 1] = v[k + 1] + ph * alpha;
        let beta = two / (two * alpha * (alpha + x0_mag));

        // p = beta * A v
        for i in k..n {
            let row = &a[i * n..(i + 1) * n];
            p[i] = (k + 1..n).fold(zero, |acc, j| acc + row[j] * v[j]) * beta;
        }
        let vp = (k + 1..n).fold(zero, |acc, j| acc + v[j].conj() * p[j]);
        let kk = vp * (beta / two);
        for i in k..n {
            p[i] = p[i] - kk * v[i];
        }
        // A <- A - v p^dagger - p v^dagger on the trailing block
        for i in k..n {
            for j in k..n {
                a[i * n + j] = a[i * n + j] - v[i] * p[j].conj() - p[i] * v[j].conj();
            }
        }
        // Q <- Q (I - beta v v^dagger)
        for r in 0..n {
            let row = &mut q[r * n..(r + 1) * n];
            let s = (k + 1..n).fold(zero, |acc, j| acc + row[j] * v[j]) * beta;
            for j in k + 1..n {
                row[j] = row[j] - s * v[j].conj();
            }
        }
    }
}

/// Implicit QL on a real symmetric tridiagonal matrix (diagonal `d`,
/// sub-diagonal `e` with `e[n-1]` unused). Eigenvectors accumulate into the
/// columns of the row-major `z`.
fn tql2<T: Real>(d: &mut [T], e: &mut [T], z: &mut [T], n: usize) -> Result<()> {
    let zero = T::zero();
    let one = T::one();
    let two = T::lit(2.0);
    let eps = T::epsilon();
    if n > 0 {
        e[n - 1] = zero;
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::NoConvergence("tridiagonal QL iteration"));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(one);
            let signed_r = if g >= zero { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + signed_r);
            let (mut s, mut c, mut p) = (one, one, zero);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == zero {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = zero;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    let zk1 = z[k * n + i + 1];
                    let zk = z[k * n + i];
                    z[k * n + i + 1] = s * zk + c * zk1;
                    z[k * n + i] = c * zk - s * zk1;
                }
            }
            if deflated {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = zero;
        }
    }
    Ok(())
}
