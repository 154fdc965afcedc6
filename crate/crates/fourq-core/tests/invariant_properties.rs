//! Structural properties of the invariant polynomials: homogeneity,
//! constancy on determinant-1 orbits, covariance under general invertible
//! quartets, and the identities relating the three degree-4 foldings.

mod common;

use common::gaussian_state;
use fourq_core::{
    apply_quartet, covariance_predict, fingerprint, inv_h, inv_l, inv_m, inv_n, rel_dev, substream,
    Complex64, LocalOperatorQuartet, PureState4, STATE_DIM,
};
use proptest::prelude::*;

fn amps_from(parts: &[f64; 32]) -> Option<PureState4> {
    let mut amps = [Complex64::new(0.0, 0.0); STATE_DIM];
    for (k, z) in amps.iter_mut().enumerate() {
        *z = Complex64::new(parts[2 * k], parts[2 * k + 1]);
    }
    PureState4::new(amps).ok()
}

#[test]
fn invariants_are_constant_over_determinant_one_orbits() {
    // 10 base states x 100 quartets. The relative deviation budget of 1e-9
    // is orders of magnitude above the observed rounding noise but far
    // below any real orbit separation.
    for state_idx in 0..10u64 {
        let base = gaussian_state(50, state_idx);
        let reference = [
            inv_h(&base),
            inv_l(&base),
            inv_m(&base),
            inv_n(&base),
            fingerprint(&base).dxt,
        ];
        for sample in 0..100u64 {
            let mut rng = substream(51, state_idx * 1000 + sample);
            let quartet = LocalOperatorQuartet::random_sl2(&mut rng);
            let moved = apply_quartet(&quartet, &base).unwrap();
            let values = [
                inv_h(&moved),
                inv_l(&moved),
                inv_m(&moved),
                inv_n(&moved),
                fingerprint(&moved).dxt,
            ];
            for (v, r) in values.iter().zip(reference.iter()) {
                assert!(
                    rel_dev(*v, *r) <= 1e-9,
                    "state {state_idx} sample {sample}: {v} drifted from {r}"
                );
            }
        }
    }
}

#[test]
fn general_invertible_quartets_scale_by_determinant_powers() {
    for i in 0..200u64 {
        let state = gaussian_state(60, i);
        let quartet = LocalOperatorQuartet::random_gl2(&mut substream(61, i));
        let moved = apply_quartet(&quartet, &state).unwrap();
        let predicted = covariance_predict(&fingerprint(&state), quartet.det_product()).unwrap();
        let actual = fingerprint(&moved);
        for (p, a) in predicted
            .components()
            .iter()
            .zip(actual.components().iter())
        {
            assert!(
                rel_dev(*p, *a) <= 1e-9,
                "sample {i}: predicted {p}, got {a}"
            );
        }
    }
}

#[test]
fn h_is_symmetric_under_every_qubit_relabeling() {
    let perms: [[usize; 4]; 6] = [
        [2, 1, 3, 4],
        [3, 2, 1, 4],
        [4, 2, 3, 1],
        [1, 3, 2, 4],
        [1, 4, 3, 2],
        [1, 2, 4, 3],
    ];
    for i in 0..20u64 {
        let s = gaussian_state(62, i);
        let h = inv_h(&s);
        for perm in perms {
            let relabeled = s.relabel_qubits(perm).unwrap();
            assert!(
                rel_dev(inv_h(&relabeled), h) <= 1e-12,
                "transposition {perm:?} moved H"
            );
        }
    }
}

proptest! {
    #[test]
    fn scaling_amplitudes_scales_each_invariant_by_its_degree(
        parts in prop::array::uniform32(-1.0f64..1.0),
        scale_re in -2.0f64..2.0,
        scale_im in -2.0f64..2.0,
    ) {
        let c = Complex64::new(scale_re, scale_im);
        prop_assume!(c.norm() > 0.05);
        let Some(state) = amps_from(&parts) else { return Ok(()) };
        let scaled = state.scaled(c).unwrap();
        let f = fingerprint(&state);
        let g = fingerprint(&scaled);
        // Degrees 2, 4, 4, 6 in the amplitudes.
        prop_assert!(rel_dev(g.h, c.powu(2) * f.h) <= 1e-9);
        prop_assert!(rel_dev(g.l, c.powu(4) * f.l) <= 1e-9);
        prop_assert!(rel_dev(g.m, c.powu(4) * f.m) <= 1e-9);
        prop_assert!(rel_dev(g.dxt, c.powu(6) * f.dxt) <= 1e-9);
    }

    #[test]
    fn degree_four_foldings_satisfy_their_two_identities(
        parts in prop::array::uniform32(-1.0f64..1.0),
    ) {
        let Some(state) = amps_from(&parts) else { return Ok(()) };
        // The three foldings are linearly dependent: N = L + M.
        let n = inv_n(&state);
        let sum = inv_l(&state) + inv_m(&state);
        prop_assert!((n - sum).norm() <= 1e-12 * sum.norm().max(1.0));
        // And M is L read through the cyclic relabeling (2, 3, 1, 4).
        let cycled = state.relabel_qubits([2, 3, 1, 4]).unwrap();
        let m = inv_m(&state);
        prop_assert!((m - inv_l(&cycled)).norm() <= 1e-12 * m.norm().max(1.0));
    }
}
