// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use cqed_core::dynamics::{evolve, evolve_with, liouvillian, steady_state, EvolveOptions};
use cqed_core::opalg::eig_hermitian;
use cqed_core::twolevel::{lindblad_model, TlsDriveParams};
use cqed_core::{LindbladModel, Operator};
use nalgebra::DMatrix;
use num_complex::Complex;
use proptest::prelude::*;

fn matrix(dim: usize, v: &[(f64, f64)]) -> Operator {
    Operator::from_fn(dim, |r, c| {
        let (x, y) = v[(r * dim + c) % v.len()];
        Complex::new(x, y)
    })
}

fn random_model() -> impl Strategy<Value = (LindbladModel, Operator)> {
    (2usize..=6, 0usize..=3).prop_flat_map(|(dim, nch)| {
        (
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim),
            prop::collection::vec((prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim), 0.0f64..1.0), nch),
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim),
        )
            .prop_map(move |(h, chans, r)| {
                let a = matrix(dim, &h);
                let mut model = LindbladModel::new((&a + &a.adjoint()).scale_real(0.5)).unwrap();
                for (j, rate) in chans {
                    model = model.with_channel(matrix(dim, &j), rate).unwrap();
                }
                let b = matrix(dim, &r);
                let rho = &b * &b.adjoint();
                let tr = rho.trace().re;
                (model, rho.scale_real(1.0 / tr))
            })
    })
}

fn max_diff(a: &Operator, b: &Operator) -> f64 {
    (a - b).max_abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cptp_sanity((model, rho0) in random_model()) {
        let times: Vec<f64> = (0..=10).map(|k| k as f64).collect();
        let opts = EvolveOptions { max_step: Some(1e-3), ..EvolveOptions::default() };
        let traj = evolve_with(&model, &rho0, &times, &opts).unwrap();
        prop_assert!(traj.steps >= 10_000);
        for rho in &traj.states {
            prop_assert!((rho.trace().re - 1.0).abs() <= 1e-8);
            prop_assert!(rho.hermiticity_defect() <= 1e-9);
            prop_assert!(eig_hermitian(&(rho + &rho.adjoint()).scale_real(0.5)).unwrap().values[0] >= -1e-6);
        }
    }

    #[test]
    fn liouvillian_is_contractive((model, _) in random_model()) {
        let l = liouvillian(&model, 0.0).unwrap();
        let m = DMatrix::from_fn(l.dim(), l.dim(), |r, c| l[(r, c)]);
        let (_, t) = m.schur().unpack();
        for z in t.diagonal().iter() {
            prop_assert!(z.re <= 1e-10, "eigenvalue {}", z);
        }
    }
}

fn tls(gamma: f64, delta: f64, g: f64) -> LindbladModel {
    lindblad_model(&TlsDriveParams { gamma, delta, rabi_g: g, density: 0.0, dipole: 0.0 }).unwrap()
}

#[test]
fn rk4_fourth_order() {
    let model = tls(0.1, 0.3, 1.0);
    let rho0 = Operator::projector(2, 0);
    let times = [0.0, 5.0];
    let run = |h: f64| {
        let opts = EvolveOptions { step_factor: 1e-6, max_step: Some(h), observables: vec![] };
        evolve_with(&model, &rho0, &times, &opts).unwrap().final_state().clone()
    };
    let h = 0.1;
    let coarse = max_diff(&run(h), &run(h / 4.0));
    let fine = max_diff(&run(h / 2.0), &run(h / 8.0));
    assert!(coarse / fine >= 8.0, "ratio {}", coarse / fine);
}

#[test]
fn steady_state_is_fixed_point() {
    for &(gamma, delta, g) in &[(0.5, 0.0, 0.7), (0.2, -1.3, 0.4), (1.0, 2.0, 3.0)] {
        let model = tls(gamma, delta, g);
        let rho = steady_state(&model).unwrap();
        let traj = evolve(&model, &rho, &[0.0, 10.0 / gamma]).unwrap();
        assert!(max_diff(traj.final_state(), &rho) <= 1e-8);
    }
}
