//! Polynomial invariants separating local-operation orbits of four qubits.
//!
//! Four algebraically independent polynomials in the amplitudes make up the
//! fingerprint of a state:
//!
//! * `inv_h`, degree 2: a signed pairing of each amplitude with its
//!   bit-complement partner.
//! * `inv_l` and `inv_m`, degree 4: determinants of two 4x4 foldings of the
//!   amplitude list, one grouping qubits (12|34), the other (13|24).
//! * `inv_dxt`, degree 6: the determinant of a 3x3 matrix whose entries are
//!   quadratic forms in the amplitudes.
//!
//! Under an invertible quartet `(A, B, C, D)` with determinant product `d`,
//! the four values pick up the factors `d`, `d^2`, `d^2`, `d^3`. They are
//! therefore constant on SL orbits and, with weights `(1, 2, 2, 3)`, define
//! a weighted-projective point on GL orbits.
//!
//! A third degree-4 determinant `inv_n` folds the remaining grouping
//! (14|23). It satisfies `inv_n = inv_l + inv_m` identically, so it adds no
//! separating power and stays out of the fingerprint; it is still exposed
//! for reporting and as an internal consistency check.

use num_complex::Complex64;
use serde::Serialize;

use crate::state::{c64_as_pair, PureState4};

/// Scaling weights of (H, L, M, Dxt) under determinant rescaling.
pub const WEIGHTS: [u32; 4] = [1, 2, 2, 3];

/// Determinant by Gaussian elimination with partial pivoting, in place.
///
/// The pivot is the entry of largest modulus at or below the diagonal; an
/// exactly zero pivot column short-circuits to an exactly zero determinant,
/// so states with a vanishing row fold produce clean zeros rather than
/// rounding residue.
fn det_in_place<const N: usize>(m: &mut [[Complex64; N]; N]) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..N {
        let mut pivot = col;
        for row in col + 1..N {
            if m[row][col].norm_sqr() > m[pivot][col].norm_sqr() {
                pivot = row;
            }
        }
        if m[pivot][col] == Complex64::new(0.0, 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        let pivot_row = m[col];
        for row in m[col + 1..].iter_mut() {
            let factor = row[col] / pivot_row[col];
            for (entry, lead) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                *entry -= factor * lead;
            }
        }
    }
    det
}

/// Degree-2 invariant: `2 * sum_k (-1)^popcount(k) a_k a_{15-k}` over `k < 8`.
pub fn inv_h(state: &PureState4) -> Complex64 {
    let a = state.amplitudes();
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..8usize {
        let term = a[k] * a[15 - k];
        if (k as u32).count_ones().is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    2.0 * sum
}

/// Degree-4 determinant of the (12|34) folding: entry `(r, c) = a_{4c + r}`,
/// columns indexed by the bits `q1 q2`, rows by `q3 q4`.
pub fn inv_l(state: &PureState4) -> Complex64 {
    let a = state.amplitudes();
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            *entry = a[4 * c + r];
        }
    }
    det_in_place(&mut m)
}

/// Amplitude index layout of the (13|24) folding behind `inv_m`: columns
/// carry the bits `q1 q3`, rows the bits `q2 q4`.
const M_ROWS: [[usize; 4]; 4] = [[0, 8, 2, 10], [1, 9, 3, 11], [4, 12, 6, 14], [5, 13, 7, 15]];

/// Degree-4 determinant of the (13|24) folding.
pub fn inv_m(state: &PureState4) -> Complex64 {
    let a = state.amplitudes();
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (row, idx) in m.iter_mut().zip(M_ROWS.iter()) {
        for (entry, &k) in row.iter_mut().zip(idx.iter()) {
            *entry = a[k];
        }
    }
    det_in_place(&mut m)
}

/// Degree-4 determinant of the (14|23) folding: `inv_l` evaluated on the
/// state with qubits 2 and 4 exchanged. Satisfies `inv_n = inv_l + inv_m`.
pub fn inv_n(state: &PureState4) -> Complex64 {
    let swapped = state
        .relabel_qubits([1, 4, 3, 2])
        .expect("fixed relabeling is a valid permutation");
    inv_l(&swapped)
}

/// Degree-6 invariant: determinant of a 3x3 matrix of quadratic forms.
///
/// The top row is bilinear within the `q1 = 0` half of the amplitudes, the
/// bottom row within the `q1 = 1` half, and the middle row couples the two
/// halves.
pub fn inv_dxt(state: &PureState4) -> Complex64 {
    let a = state.amplitudes();
    let top = [
        a[0] * a[6] - a[2] * a[4],
        a[0] * a[7] + a[1] * a[6] - a[2] * a[5] - a[3] * a[4],
        a[1] * a[7] - a[3] * a[5],
    ];
    let mid = [
        a[0] * a[14] + a[6] * a[8] - a[2] * a[12] - a[4] * a[10],
        a[0] * a[15] + a[6] * a[9] + a[1] * a[14] + a[7] * a[8]
            - a[2] * a[13]
            - a[3] * a[12]
            - a[4] * a[11]
            - a[5] * a[10],
        a[1] * a[15] + a[7] * a[9] - a[3] * a[13] - a[5] * a[11],
    ];
    let bot = [
        a[8] * a[14] - a[10] * a[12],
        a[8] * a[15] + a[9] * a[14] - a[10] * a[13] - a[11] * a[12],
        a[9] * a[15] - a[11] * a[13],
    ];
    let mut m = [top, mid, bot];
    det_in_place(&mut m)
}

/// The weighted tuple `(H, L, M, Dxt)` of a state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InvariantFingerprint {
    #[serde(rename = "H", serialize_with = "c64_as_pair")]
    pub h: Complex64,
    #[serde(rename = "L", serialize_with = "c64_as_pair")]
    pub l: Complex64,
    #[serde(rename = "M", serialize_with = "c64_as_pair")]
    pub m: Complex64,
    #[serde(rename = "Dxt", serialize_with = "c64_as_pair")]
    pub dxt: Complex64,
    /// Squared norm of the source state, the natural weight-1 magnitude.
    /// Rounding error in evaluating a weight-w component grows like
    /// `epsilon * ref_scale^w`, so zero classification keeps this around to
    /// know the noise floor. Zero for fingerprints built by hand.
    #[serde(skip)]
    pub ref_scale: f64,
}

impl InvariantFingerprint {
    pub fn components(&self) -> [Complex64; 4] {
        [self.h, self.l, self.m, self.dxt]
    }

    pub fn component_names() -> [&'static str; 4] {
        ["H", "L", "M", "Dxt"]
    }

    /// Natural magnitude of the fingerprint: the largest component modulus
    /// after undoing each component's weight. Zero exactly when every
    /// component is exactly zero.
    pub fn scale(&self) -> f64 {
        let [h, l, m, dxt] = self.components();
        h.norm()
            .max(l.norm().sqrt())
            .max(m.norm().sqrt())
            .max(dxt.norm().cbrt())
    }
}

/// Evaluates all four fingerprint components.
pub fn fingerprint(state: &PureState4) -> InvariantFingerprint {
    InvariantFingerprint {
        h: inv_h(state),
        l: inv_l(state),
        m: inv_m(state),
        dxt: inv_dxt(state),
        ref_scale: state.norm() * state.norm(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_state;
    use crate::state::{PureState4, STATE_DIM};
    use rand::Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn gaussian_state(seed: u64) -> PureState4 {
        let mut rng = crate::rng::substream(seed, 0);
        let mut amps = [c(0.0, 0.0); STATE_DIM];
        for z in &mut amps {
            *z = c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        }
        PureState4::new(amps).unwrap()
    }

    /// Independent oracle: Leibniz expansion over all 24 permutations.
    fn leibniz_det4(m: &[[Complex64; 4]; 4]) -> Complex64 {
        let mut total = c(0.0, 0.0);
        let perms = permutations(&[0, 1, 2, 3]);
        for p in perms {
            let mut term = c(parity(&p), 0.0);
            for (r, &col) in p.iter().enumerate() {
                term *= m[r][col];
            }
            total += term;
        }
        total
    }

    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for (i, &x) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
        out
    }

    fn parity(p: &[usize]) -> f64 {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    #[test]
    fn pivoted_determinant_matches_leibniz_expansion() {
        let mut rng = crate::rng::substream(9, 0);
        for _ in 0..50 {
            let mut m = [[c(0.0, 0.0); 4]; 4];
            for row in &mut m {
                for entry in row.iter_mut() {
                    *entry = c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
                }
            }
            let mut work = m;
            let fast = det_in_place(&mut work);
            let slow = leibniz_det4(&m);
            assert!(
                (fast - slow).norm() <= 1e-12 * slow.norm().max(1.0),
                "pivoted {fast} vs leibniz {slow}"
            );
        }
    }

    #[test]
    fn determinant_of_singular_matrix_is_exactly_zero() {
        let mut m = [[c(0.0, 0.0); 4]; 4];
        m[0] = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)];
        m[1] = m[0];
        m[2][2] = c(1.0, 0.0);
        m[3][3] = c(1.0, 0.0);
        assert_eq!(det_in_place(&mut m), c(0.0, 0.0));
    }

    #[test]
    fn inv_h_reproduces_the_printed_sign_pattern() {
        // Signs on a_k a_{15-k} for k = 0..=7.
        let signs = [1.0, -1.0, -1.0, 1.0, -1.0, 1.0, 1.0, -1.0];
        for seed in 0..8 {
            let s = gaussian_state(seed);
            let a = s.amplitudes();
            let mut expected = c(0.0, 0.0);
            for (k, sign) in signs.iter().enumerate() {
                expected += *sign * a[k] * a[15 - k];
            }
            expected *= 2.0;
            assert!((inv_h(&s) - expected).norm() < 1e-14);
        }
    }

    #[test]
    fn chi_fingerprint_matches_the_catalog_values() {
        let chi = named_state("chi").unwrap();
        let f = fingerprint(&chi);
        assert!(f.h.norm() <= 1e-15, "H(chi) = {}", f.h);
        assert!((f.l - c(-0.0625, 0.0)).norm() <= 1e-15, "L(chi) = {}", f.l);
        assert!((f.m - c(0.0625, 0.0)).norm() <= 1e-15, "M(chi) = {}", f.m);
        assert!(f.dxt.norm() <= 1e-15, "Dxt(chi) = {}", f.dxt);
        assert!(inv_n(&chi).norm() <= 1e-15);
    }

    #[test]
    fn hadamard_images_of_chi_share_its_fingerprint() {
        for name in ["phi_m1", "phi_m2"] {
            let s = named_state(name).unwrap();
            let f = fingerprint(&s);
            assert!(f.h.norm() <= 1e-15);
            assert!((f.l - c(-0.0625, 0.0)).norm() <= 1e-15);
            assert!((f.m - c(0.0625, 0.0)).norm() <= 1e-15);
            assert!(f.dxt.norm() <= 1e-15);
        }
    }

    #[test]
    fn ghz_fingerprint_is_h_only() {
        let f = fingerprint(&named_state("ghz4").unwrap());
        assert!((f.h - c(1.0, 0.0)).norm() <= 1e-15);
        assert!(f.l.norm() <= 1e-15);
        assert!(f.m.norm() <= 1e-15);
        assert!(f.dxt.norm() <= 1e-15);
    }

    #[test]
    fn w_state_fingerprint_vanishes_identically() {
        let w = named_state("w4").unwrap();
        let f = fingerprint(&w);
        // The foldings of w4 contain zero rows, so these are exact zeros.
        assert_eq!(f.h, c(0.0, 0.0));
        assert_eq!(f.l, c(0.0, 0.0));
        assert_eq!(f.m, c(0.0, 0.0));
        assert_eq!(f.dxt, c(0.0, 0.0));
        assert_eq!(f.scale(), 0.0);
    }

    #[test]
    fn cluster_state_separates_from_the_degenerate_states() {
        let f = fingerprint(&named_state("cluster4").unwrap());
        assert!(f.h.norm() <= 1e-15);
        assert!(f.l.norm() <= 1e-15);
        assert!((f.m - c(0.0625, 0.0)).norm() <= 1e-15);
        assert!(f.dxt.norm() <= 1e-15);
    }

    #[test]
    fn inv_n_equals_inv_l_plus_inv_m() {
        for seed in 0..32 {
            let s = gaussian_state(seed);
            let n = inv_n(&s);
            let sum = inv_l(&s) + inv_m(&s);
            assert!(
                (n - sum).norm() <= 1e-13 * sum.norm().max(1.0),
                "seed {seed}: N = {n}, L + M = {sum}"
            );
        }
    }

    #[test]
    fn inv_m_is_inv_l_after_the_cyclic_relabeling() {
        // Reading qubit slots (2, 3, 1, 4) makes the (13|24) folding of the
        // original state coincide entry-by-entry with the (12|34) folding of
        // the relabeled one. The plain 2 <-> 3 transposition instead swaps
        // two columns and flips the determinant's sign.
        for seed in 40..56 {
            let s = gaussian_state(seed);
            let cycled = s.relabel_qubits([2, 3, 1, 4]).unwrap();
            let m = inv_m(&s);
            assert!((m - inv_l(&cycled)).norm() <= 1e-13 * m.norm().max(1.0));
            let swapped = s.relabel_qubits([1, 3, 2, 4]).unwrap();
            assert!((m + inv_l(&swapped)).norm() <= 1e-13 * m.norm().max(1.0));
        }
    }

    #[test]
    fn fingerprint_scale_tracks_component_weights() {
        let f = InvariantFingerprint {
            h: c(0.0, 0.0),
            l: c(0.0, 0.0),
            m: c(0.0, 0.0),
            dxt: c(-8e-3, 0.0),
            ref_scale: 0.0,
        };
        assert!((f.scale() - 0.2).abs() < 1e-15);
    }

    #[test]
    fn fingerprint_serializes_with_fixed_keys() {
        let f = fingerprint(&named_state("ghz4").unwrap());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"H":[1.0000000000000002,0.0],"L":[0.0,0.0],"M":[0.0,0.0],"Dxt":[0.0,0.0]}"#
        );
    }
}
