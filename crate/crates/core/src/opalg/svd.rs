// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! Rectangular complex matrices, one-sided Jacobi SVD and least squares.
//!
//! Only what the steady-state solver needs: rank detection and a minimum-norm
//! least-squares solve of a tall system.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense `rows x cols` complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T: Real> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, z: Complex<T>) {
        self.data[r * self.cols + c] = z;
    }

    fn column(&self, c: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
}

/// Thin SVD `A = U diag(s) V^dagger`; singular values are descending.
#[derive(Clone, Debug)]
pub struct Svd<T: Real> {
    /// Columns of `U`, each of length `rows` (zero for vanishing singular values).
    pub u: Vec<Vec<Complex<T>>>,
    pub s: Vec<T>,
    /// Columns of `V`, each of length `cols`.
    pub v: Vec<Vec<Complex<T>>>,
}

impl<T: Real> Svd<T> {
    /// Number of singular values above `rel_tol * s_max`.
    pub fn rank(&self, rel_tol: T) -> usize {
        let smax = self.s.first().copied().unwrap_or(T::zero());
        self.s.iter().filter(|&&x| x > rel_tol * smax).count()
    }
}

/// One-sided (Hestenes) Jacobi SVD. Requires `rows >= cols`.
pub fn svd<T: Real>(a: &Matrix<T>) -> Result<Svd<T>> {
    let (m, n) = (a.rows, a.cols);
    if m < n {
        return Err(Error::InvalidDimension(format!("svd needs rows >= cols, got {m}x{n}")));
    }
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let mut cols: Vec<Vec<Complex<T>>> = (0..n).map(|c| a.column(c)).collect();
    let mut v: Vec<Vec<Complex<T>>> = (0..n)
        .map(|c| {
            let mut e = vec![zero; n];
            e[c] = one;
            e
        })
        .collect();

    let tol = T::epsilon() * T::lit(4.0);
    // Columns already at rounding level of the whole matrix carry no
    // information; rotating them only shuffles noise.
    let frob: T = a.data.iter().map(|z| z.norm_sqr()).sum();
    let floor = T::epsilon() * T::epsilon() * frob;
    let mut converged = false;
    for _sweep in 0..80 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: T = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: T = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma = cols[p].iter().zip(&cols[q]).fold(zero, |s, (x, y)| s + x.conj() * y);
                let g = gamma.norm();
                if g <= floor || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (T::lit(2.0) * g);
                let sign = if zeta >= T::zero() { T::one() } else { -T::one() };
                let t = sign / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                let e = gamma / g;
                rotate(&mut cols, p, q, c, s, e);
                rotate(&mut v, p, q, c, s, e);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence("one-sided Jacobi SVD"));
    }

    let mut s: Vec<T> = cols.iter().map(|c| c.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[j].partial_cmp(&s[i]).unwrap_or(std::cmp::Ordering::Equal));
    let u: Vec<Vec<Complex<T>>> = order
        .iter()
        .map(|&k| {
            if s[k] > T::zero() {
                cols[k].iter().map(|&z| z / s[k]).collect()
            } else {
                vec![zero; m]
            }
        })
        .collect();
    let v = order.iter().map(|&k| v[k].clone()).collect();
    s = order.iter().map(|&k| s[k]).collect();
    Ok(Svd { u, s, v })
}

fn rotate<T: Real>(cols: &mut [Vec<Complex<T>>], p: usize, q: usize, c: T, s: T, e: Complex<T>) {
    let (lo, hi) = cols.split_at_mut(q);
    let (ap, aq) = (&mut lo[p], &mut hi[0]);
    for (x, y) in ap.iter_mut().zip(aq.iter_mut()) {
        let (xp, xq) = (*x, *y);
        *x = xp * c - e.conj() * xq * s;
        *y = e * xp * s + xq * c;
    }
}

/// Least-squares solution of `A x = b`, discarding singular values below
/// `rel_tol * s_max`. Returns the solution and the SVD it was built from.
pub fn lstsq<T: Real>(a: &Matrix<T>, b: &[Complex<T>], rel_tol: T) -> Result<(Vec<Complex<T>>, Svd<T>)> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch { expected: a.rows, found: b.len() });
    }
    let dec = svd(a)?;
    let zero = Complex::new(T::zero(), T::zero());
    let smax = dec.s.first().copied().unwrap_or(T::zero());
    let mut x = vec![zero; a.cols];
    for (k, &sk) in dec.s.iter().enumerate() {
        if sk <= rel_tol * smax || sk == T::zero() {
            continue;
        }
        let coef = dec.u[k].iter().zip(b).fold(zero, |s, (u, y)| s + u.conj() * y) / sk;
        for (xi, vi) in x.iter_mut().zip(&dec.v[k]) {
            *xi = *xi + coef * vi;
        }
    }
    Ok((x, dec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[(f64, f64)]]) -> Matrix<f64> {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &(re, im)) in row.iter().enumerate() {
                m.set(r, c, Complex::new(re, im));
            }
        }
        m
    }

    #[test]
    fn singular_values_of_diagonal() {
        let m = from_rows(&[&[(3.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (0.0, -4.0)], &[(0.0, 0.0), (0.0, 0.0)]]);
        let d = svd(&m).unwrap();
        assert!((d.s[0] - 4.0).abs() < 1e-14);
        assert!((d.s[1] - 3.0).abs() < 1e-14);
        assert_eq!(d.rank(1e-9), 2);
    }

    #[test]
    fn rank_deficient_detected() {
        let m = from_rows(&[
            &[(1.0, 1.0), (2.0, 2.0)],
            &[(0.5, 0.0), (1.0, 0.0)],
            &[(0.0, 2.0), (0.0, 4.0)],
        ]);
        assert_eq!(svd(&m).unwrap().rank(1e-9), 1);
    }

    #[test]
    fn reconstructs_matrix() {
        let m = from_rows(&[
            &[(1.0, 0.5), (2.0, -1.0), (0.0, 0.3)],
            &[(-0.4, 0.0), (1.0, 1.0), (2.0, 0.0)],
            &[(0.7, -0.2), (0.0, 0.0), (1.5, 0.5)],
            &[(0.1, 0.1), (0.2, 0.2), (0.3, -0.3)],
        ]);
        let d = svd(&m).unwrap();
        for r in 0..4 {
            for c in 0..3 {
                let z = (0..3).fold(Complex::new(0.0, 0.0), |s, k| s + d.u[k][r] * d.s[k] * d.v[k][c].conj());
                assert!((z - m.get(r, c)).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn least_squares_overdetermined() {
        // x + y = 2, x - y = 0, 2x = 2.2 -> normal equations give x = (2 + 0 + 4.4)/6 ... solved below
        let m = from_rows(&[&[(1.0, 0.0), (1.0, 0.0)], &[(1.0, 0.0), (-1.0, 0.0)], &[(2.0, 0.0), (0.0, 0.0)]]);
        let b = [Complex::new(2.0, 0.0), Complex::new(0.0, 0.0), Complex::new(2.2, 0.0)];
        let (x, _) = lstsq(&m, &b, 1e-12).unwrap();
        // A^T A = [[6,0],[0,2]], A^T b = [6.4, 2]
        assert!((x[0].re - 6.4 / 6.0).abs() < 1e-14);
        assert!((x[1].re - 1.0).abs() < 1e-14);
    }
}
