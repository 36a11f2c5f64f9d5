// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex operator algebra.
//!
//! Two-level conventions: basis index 0 is `|g>`, index 1 is `|e>`. With that
//! ordering [`destroy`]`(2)` is the lowering operator `|g><e|`, [`pauli_z`] is
//! the textbook `diag(1, -1)` and [`inversion`] is `|e><e| - |g><g|`.

mod eigen;
mod operator;
pub mod svd;

use num_complex::Complex;

pub use eigen::{eig_hermitian, EigenSystem};
pub use operator::{Operator, DEFAULT_MAX_DIM};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Truncated annihilation operator: `<k|a|k+1> = sqrt(k+1)`.
///
/// The top level is simply cut off, so `[a, a^dagger]` is the identity
/// except for the last diagonal entry, which is `-(n_levels - 1)`.
pub fn destroy<T: Real>(n_levels: usize) -> Result<Operator<T>> {
    if n_levels < 2 {
        return Err(Error::InvalidDimension(format!(
            "ladder operators need at least 2 levels, got {n_levels}"
        )));
    }
    let mut a = Operator::zeros(n_levels);
    for k in 0..n_levels - 1 {
        a[(k, k + 1)] = Complex::new(T::from_usize(k + 1).unwrap().sqrt(), T::zero());
    }
    Ok(a)
}

/// Truncated creation operator.
pub fn create<T: Real>(n_levels: usize) -> Result<Operator<T>> {
    destroy(n_levels).map(|a| a.adjoint())
}

/// Number operator `diag(0, 1, ..., n - 1)`.
pub fn number<T: Real>(n_levels: usize) -> Result<Operator<T>> {
    if n_levels < 1 {
        return Err(Error::InvalidDimension("number operator needs at least 1 level".into()));
    }
    let diag: Vec<T> = (0..n_levels).map(|k| T::from_usize(k).unwrap()).collect();
    Ok(Operator::from_diag(&diag))
}

pub fn pauli_x<T: Real>() -> Operator<T> {
    let (o, l) = (T::zero(), T::one());
    Operator::from_real_rows(&[vec![o, l], vec![l, o]]).unwrap()
}

pub fn pauli_y<T: Real>() -> Operator<T> {
    let z = Complex::new(T::zero(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    Operator::from_rows(&[vec![z, -i], vec![i, z]]).unwrap()
}

pub fn pauli_z<T: Real>() -> Operator<T> {
    Operator::from_diag(&[T::one(), -T::one()])
}

/// `|g><e|`.
pub fn sigma_minus<T: Real>() -> Operator<T> {
    Operator::ket_bra(2, 0, 1)
}

/// `|e><g|`.
pub fn sigma_plus<T: Real>() -> Operator<T> {
    Operator::ket_bra(2, 1, 0)
}

/// Population inversion `|e><e| - |g><g|`, i.e. `-pauli_z`.
pub fn inversion<T: Real>() -> Operator<T> {
    Operator::from_diag(&[-T::one(), T::one()])
}

/// Basis ket `|k>` in dimension `dim`.
pub fn basis<T: Real>(dim: usize, k: usize) -> Vec<Complex<T>> {
    assert!(k < dim, "basis index {k} out of range for dimension {dim}");
    let mut v = vec![Complex::new(T::zero(), T::zero()); dim];
    v[k] = Complex::new(T::one(), T::zero());
    v
}

/// Kronecker product, left factor slow. See [`Operator::kron`].
pub fn kron<T: Real>(a: &Operator<T>, b: &Operator<T>) -> Result<Operator<T>> {
    a.kron(b)
}

/// `Tr(op rho)`.
pub fn expect<T: Real>(op: &Operator<T>, rho: &Operator<T>) -> Result<Complex<T>> {
    if op.dim() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: op.dim(), found: rho.dim() });
    }
    let n = op.dim();
    let zero = Complex::new(T::zero(), T::zero());
    let mut acc = zero;
    for i in 0..n {
        for k in 0..n {
            acc = acc + op[(i, k)] * rho[(k, i)];
        }
    }
    Ok(acc)
}

/// `<psi|op|psi>`.
pub fn expect_ket<T: Real>(op: &Operator<T>, psi: &[Complex<T>]) -> Complex<T> {
    let v = op.apply(psi);
    psi.iter().zip(&v).fold(Complex::new(T::zero(), T::zero()), |a, (x, y)| a + x.conj() * y)
}

/// Inner product `<a|b>`.
pub fn inner<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Complex::new(T::zero(), T::zero()), |s, (x, y)| s + x.conj() * y)
}
