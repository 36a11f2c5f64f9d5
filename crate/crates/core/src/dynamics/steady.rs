// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex;

use super::liouvillian::liouvillian;
use super::model::LindbladModel;
use crate::error::{Error, Result};
use crate::opalg::svd::{lstsq, svd, Matrix};
use crate::opalg::Operator;
use crate::scalar::Real;

const RANK_TOL: f64 = 1e-9;

/// Unique stationary state of a time-independent model.
///
/// Solves the stacked system `[L; w vec(I)^T] x = [0; w]` in the least
/// squares sense, with `w` the largest Liouvillian entry. The null space of
/// `L` is measured first; more than one zero singular value is reported as
/// [`Error::SteadyStateMultiplicity`].
pub fn steady_state<T: Real>(model: &LindbladModel<T>) -> Result<Operator<T>> {
    if model.is_time_dependent() {
        return Err(Error::TimeDependentModel);
    }
    let d = model.dim();
    let n = d * d;
    let l = liouvillian(model, T::zero())?;
    let scale = l.max_abs();
    if scale == T::zero() {
        return Err(Error::SteadyStateMultiplicity { nullity: n });
    }

    let mut sq = Matrix::zeros(n, n);
    let mut stacked = Matrix::zeros(n + 1, n);
    for r in 0..n {
        for c in 0..n {
            sq.set(r, c, l[(r, c)]);
            stacked.set(r, c, l[(r, c)]);
        }
    }
    let nullity = n - svd(&sq)?.rank(T::tolerance(RANK_TOL));
    if nullity > 1 {
        return Err(Error::SteadyStateMultiplicity { nullity });
    }

    let w = Complex::new(scale, T::zero());
    for k in 0..d {
        stacked.set(n, k * d + k, w);
    }
    let mut rhs = vec![Complex::new(T::zero(), T::zero()); n + 1];
    rhs[n] = w;
    let (x, _) = lstsq(&stacked, &rhs, T::tolerance(RANK_TOL))?;
    let rho = Operator::unvectorize(&x)?;
    Ok((&rho + &rho.adjoint()).scale_real(T::lit(0.5)))
}
