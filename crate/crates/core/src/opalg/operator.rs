// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest dimension a Kronecker product may produce unless the caller
/// raises it explicitly with [`Operator::kron_with_limit`].
pub const DEFAULT_MAX_DIM: usize = 4096;

/// Dense square complex matrix, stored row-major.
///
/// Entries are finite and `dim >= 1`. Constructors fed with external data
/// ([`Operator::from_vec`], [`Operator::from_rows`]) check both; the
/// arithmetic operators assume them.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator<T: Real> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> Operator<T> {
    /// Zero operator. Panics on `dim == 0`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "operator dimension must be at least 1");
        Self { dim, data: vec![Complex::new(T::zero(), T::zero()); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Self::zeros(dim);
        for i in 0..dim {
            op.data[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        op
    }

    /// Builds an operator entry by entry.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut op = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                op.data[r * dim + c] = f(r, c);
            }
        }
        op
    }

    /// Wraps row-major data, validating the length and finiteness.
    pub fn from_vec(dim: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension("operator dimension must be at least 1".into()));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: data.len() });
        }
        if let Some(k) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite { row: k / dim, col: k % dim });
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        Self::from_vec(dim, rows.iter().flatten().copied().collect())
    }

    /// Real matrix from rows.
    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        let rows: Vec<Vec<Complex<T>>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex::new(x, T::zero())).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_diag(diag: &[T]) -> Self {
        let mut op = Self::zeros(diag.len());
        for (i, &x) in diag.iter().enumerate() {
            op[(i, i)] = Complex::new(x, T::zero());
        }
        op
    }

    /// `|i><j|` in a `dim`-dimensional space.
    pub fn ket_bra(dim: usize, i: usize, j: usize) -> Self {
        let mut op = Self::zeros(dim);
        op[(i, j)] = Complex::new(T::one(), T::zero());
        op
    }

    /// `|i><i|`.
    pub fn projector(dim: usize, i: usize) -> Self {
        Self::ket_bra(dim, i, i)
    }

    /// Outer product `|a><b|`.
    pub fn outer(a: &[Complex<T>], b: &[Complex<T>]) -> Self {
        assert_eq!(a.len(), b.len(), "outer product of kets with different lengths");
        Self::from_fn(a.len(), |r, c| a[r] * b[c].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn scale_real(&self, s: T) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * s).collect() }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: Complex<T>, other: &Self) {
        assert_eq!(self.dim, other.dim, "dimension mismatch in add_scaled");
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = *a + s * b;
        }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).map(|i| self[(i, i)]).fold(Complex::new(T::zero(), T::zero()), |a, b| a + b)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// `max |A - A^dagger|` over entries.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Matrix-vector product.
    pub fn apply(&self, ket: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(ket.len(), self.dim, "ket length does not match operator dimension");
        (0..self.dim)
            .map(|r| {
                let row = &self.data[r * self.dim..(r + 1) * self.dim];
                row.iter()
                    .zip(ket)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// Kronecker product with the default capacity limit; `self` is the slow index.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.kron_with_limit(other, DEFAULT_MAX_DIM)
    }

    pub fn kron_with_limit(&self, other: &Self, max_dim: usize) -> Result<Self> {
        let dim = self
            .dim
            .checked_mul(other.dim)
            .ok_or(Error::Capacity { dim: usize::MAX, max: max_dim })?;
        if dim > max_dim {
            return Err(Error::Capacity { dim, max: max_dim });
        }
        let n = other.dim;
        Ok(Self::from_fn(dim, |r, c| self[(r / n, c / n)] * other[(r % n, c % n)]))
    }

    /// Column-stacked vectorization: element `(r, c)` lands at `c * dim + r`.
    pub fn vectorize(&self) -> Vec<Complex<T>> {
        let mut v = Vec::with_capacity(self.data.len());
        for c in 0..self.dim {
            for r in 0..self.dim {
                v.push(self[(r, c)]);
            }
        }
        v
    }

    /// Inverse of [`Operator::vectorize`].
    pub fn unvectorize(v: &[Complex<T>]) -> Result<Self> {
        let dim = (v.len() as f64).sqrt().round() as usize;
        if dim * dim != v.len() {
            return Err(Error::InvalidDimension(format!(
                "vector of length {} is not a square number",
                v.len()
            )));
        }
        Self::from_vec(dim, (0..dim * dim).map(|k| v[(k % dim) * dim + k / dim]).collect())
    }

    /// Returns the first non-finite entry, if any.
    pub fn find_non_finite(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
            .map(|k| (k / self.dim, k % self.dim))
    }
}

impl<T: Real> Index<(usize, usize)> for Operator<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.data[r * self.dim + c]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for Operator<T> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[r * self.dim + c]
    }
}

impl<T: Real> Mul for &Operator<T> {
    type Output = Operator<T>;

    fn mul(self, rhs: &Operator<T>) -> Operator<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in operator product");
        let n = self.dim;
        let mut out = Operator::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let dst = &mut out.data[r * n..(r + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d = *d + a * b;
                }
            }
        }
        out
    }
}

impl<T: Real> Mul<Complex<T>> for &Operator<T> {
    type Output = Operator<T>;

    fn mul(self, rhs: Complex<T>) -> Operator<T> {
        self.scale(rhs)
    }
}

impl<T: Real> Add for &Operator<T> {
    type Output = Operator<T>;

    fn add(self, rhs: &Operator<T>) -> Operator<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Real> Sub for &Operator<T> {
    type Output = Operator<T>;

    fn sub(self, rhs: &Operator<T>) -> Operator<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Real> Neg for &Operator<T> {
    type Output = Operator<T>;

    fn neg(self) -> Operator<T> {
        Operator { dim: self.dim, data: self.data.iter().map(|&z| -z).collect() }
    }
}

impl<T: Real> AddAssign<&Operator<T>> for Operator<T> {
    fn add_assign(&mut self, rhs: &Operator<T>) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in operator sum");
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a = *a + b;
        }
    }
}

impl<T: Real> SubAssign<&Operator<T>> for Operator<T> {
    fn sub_assign(&mut self, rhs: &Operator<T>) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in operator difference");
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a = *a - b;
        }
    }
}
