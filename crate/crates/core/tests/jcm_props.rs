// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use cqed_core::jcm::{
    doublet_block, excitation_number, jc_doublet, jc_hamiltonian, polariton_basis, DriveSpec, JcmParams,
};
use cqed_core::opalg::eig_hermitian;
use proptest::prelude::*;

proptest! {
    #[test]
    fn excitation_number_conserved(wr in 1.0f64..10.0, wq in 1.0f64..10.0, g in 0.0f64..1.0, n_cav in 3usize..25) {
        let p = JcmParams { omega_r: wr, omega_q: wq, g, n_cav };
        let h = jc_hamiltonian(&p).unwrap();
        prop_assert!(h.commutator(&excitation_number(n_cav).unwrap()).max_abs() <= 1e-12);
    }

    #[test]
    fn polaritons_orthonormal(chi in 1e-4f64..2e-3, frac in 0.0f64..1.0, od in 0.0f64..0.05) {
        // omega_r > omega_q so that chi > 0 and the window is non-empty;
        // chi <= 2e-3 keeps g/Delta = chi/g <= 0.1
        let g = 0.02;
        let p = JcmParams { omega_r: 5.0 + g * g / chi, omega_q: 5.0, g, n_cav: 4 };
        prop_assume!(p.dispersive_ratio() <= 0.1);
        let lo = p.omega_q - 3.0 * p.chi();
        let hi = p.omega_q - p.chi();
        let b = polariton_basis(&p, &DriveSpec { omega_d: lo + frac * (hi - lo), big_omega_d: od }).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let dot: f64 = (0..4).map(|k| b.states[i][k] * b.states[j][k]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn doublets_diagonalize_blocks() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strat = (0usize..30, -5.0f64..5.0, 0.0f64..2.0);
    use proptest::strategy::ValueTree;
    for _ in 0..1000 {
        let (n, delta, g) = strat.new_tree(&mut runner).unwrap().current();
        let wr = 5.0;
        let d = jc_doublet(n, wr, delta, g);
        let h = doublet_block(n, wr, wr + delta, g);
        let scale = h.max_abs().max(1.0);
        for (v, e) in [(d.plus, d.e_plus), (d.minus, d.e_minus)] {
            let hv = [h[(0, 0)].re * v[0] + h[(0, 1)].re * v[1], h[(1, 0)].re * v[0] + h[(1, 1)].re * v[1]];
            assert!((hv[0] - e * v[0]).abs() <= 1e-12 * scale && (hv[1] - e * v[1]).abs() <= 1e-12 * scale);
        }
        let dot = d.plus[0] * d.minus[0] + d.plus[1] * d.minus[1];
        assert!(dot.abs() <= 1e-12);
        assert!((d.plus[0].hypot(d.plus[1]) - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn zero_drive_polariton_limit() {
    let g = 0.02;
    let p = JcmParams { omega_r: 6.0, omega_q: 5.0, g, n_cav: 4 };
    let (lo, hi) = (p.omega_q - 3.0 * p.chi(), p.omega_q - p.chi());
    for frac in [0.1, 0.5, 0.9] {
        let b = polariton_basis(&p, &DriveSpec { omega_d: lo + frac * (hi - lo), big_omega_d: 1e-12 }).unwrap();
        assert!(b.nested);
        // |1> -> |g,0>, |2> -> |e,0>, |3> -> |e,1>, |4> -> |g,1>
        for (k, slot) in [0usize, 1, 3, 2].into_iter().enumerate() {
            assert!(b.states[k][slot].powi(2) >= 1.0 - 1e-10);
        }
    }
}

#[test]
fn truncation_stability() {
    for &(wr, wq, g) in &[(5.0, 5.0, 0.1), (6.0, 5.2, 0.3), (4.0, 7.0, 1.0)] {
        let lowest = |n_cav| {
            let mut e = eig_hermitian(&jc_hamiltonian(&JcmParams { omega_r: wr, omega_q: wq, g, n_cav }).unwrap())
                .unwrap()
                .values;
            e.truncate(8);
            e
        };
        for (a, b) in lowest(20).iter().zip(lowest(40)) {
            assert!((a - b).abs() <= 1e-8 * a.abs().max(1.0));
        }
    }
}
