//! Four-qubit pure states as 16 complex amplitudes.
//!
//! Amplitude `k` multiplies the computational basis ket `|q1 q2 q3 q4>` where
//! `k = 8*q1 + 4*q2 + 2*q3 + q4`, so qubit 1 occupies the most significant
//! bit. States are accepted unnormalized; the Euclidean norm is computed at
//! construction and kept on record. All-zero and non-finite amplitude lists
//! are rejected.

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{FourqError, Result};

/// Number of amplitudes in a four-qubit state.
pub const STATE_DIM: usize = 16;

/// Format tag carried by state files.
pub const FORMAT_TAG: &str = "fourq-state-v1";

/// Maps the four basis bits to the flat amplitude index.
///
/// Panics if any argument is not 0 or 1.
pub fn basis_index(q1: u8, q2: u8, q3: u8, q4: u8) -> usize {
    assert!(
        q1 <= 1 && q2 <= 1 && q3 <= 1 && q4 <= 1,
        "basis bits must be 0 or 1"
    );
    ((q1 as usize) << 3) | ((q2 as usize) << 2) | ((q3 as usize) << 1) | (q4 as usize)
}

/// Absolute and relative tolerances used by the comparisons in this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexTolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl ComplexTolerance {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        let ok = abs_tol.is_finite() && rel_tol.is_finite() && abs_tol > 0.0 && rel_tol > 0.0;
        if !ok {
            return Err(FourqError::BadTolerance {
                abs: abs_tol,
                rel: rel_tol,
            });
        }
        Ok(Self { abs_tol, rel_tol })
    }
}

impl Default for ComplexTolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
        }
    }
}

/// A pure state of four qubits. The amplitude list may carry any nonzero norm.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState4 {
    amps: [Complex64; STATE_DIM],
    norm: f64,
}

impl PureState4 {
    pub fn new(amps: [Complex64; STATE_DIM]) -> Result<Self> {
        for (index, z) in amps.iter().enumerate() {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(FourqError::NonFinite { index });
            }
        }
        let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr == 0.0 {
            return Err(FourqError::ZeroState);
        }
        Ok(Self {
            amps,
            norm: norm_sqr.sqrt(),
        })
    }

    pub fn from_slice(amps: &[Complex64]) -> Result<Self> {
        let arr: [Complex64; STATE_DIM] = amps
            .try_into()
            .map_err(|_| FourqError::WrongLength { found: amps.len() })?;
        Self::new(arr)
    }

    pub fn amplitudes(&self) -> &[Complex64; STATE_DIM] {
        &self.amps
    }

    pub fn amplitude(&self, k: usize) -> Complex64 {
        self.amps[k]
    }

    /// Euclidean norm recorded at construction; always strictly positive.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn normalized(&self) -> PureState4 {
        let mut amps = self.amps;
        for z in &mut amps {
            *z /= self.norm;
        }
        Self::new(amps).expect("rescaling a nonzero state keeps it nonzero")
    }

    pub fn scaled(&self, factor: Complex64) -> Result<PureState4> {
        let mut amps = self.amps;
        for z in &mut amps {
            *z *= factor;
        }
        Self::new(amps)
    }

    /// `<self|other>` with the bra conjugated.
    pub fn inner_product(&self, other: &PureState4) -> Complex64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(b, k)| b.conj() * k)
            .sum()
    }

    /// Reads amplitudes through a relabeling of the qubit slots: the result
    /// at bits `(x1, x2, x3, x4)` is this state's amplitude at
    /// `(x_source[0], x_source[1], x_source[2], x_source[3])` with 1-based
    /// labels. `source` must be a permutation of `[1, 2, 3, 4]`.
    pub fn relabel_qubits(&self, source: [usize; 4]) -> Result<PureState4> {
        let mut seen = [false; 4];
        for &label in &source {
            if !(1..=4).contains(&label) {
                return Err(FourqError::QubitOutOfRange { qubit: label as u8 });
            }
            if seen[label - 1] {
                return Err(FourqError::DuplicateQubit { qubit: label as u8 });
            }
            seen[label - 1] = true;
        }
        let mut amps = [Complex64::new(0.0, 0.0); STATE_DIM];
        for (k, slot) in amps.iter_mut().enumerate() {
            let x = [(k >> 3) & 1, (k >> 2) & 1, (k >> 1) & 1, k & 1];
            let src = (x[source[0] - 1] << 3)
                | (x[source[1] - 1] << 2)
                | (x[source[2] - 1] << 1)
                | x[source[3] - 1];
            *slot = self.amps[src];
        }
        // A relabeling permutes the amplitude list, so the norm is unchanged.
        Ok(Self {
            amps,
            norm: self.norm,
        })
    }

    /// True when `other` equals this state up to one global phase.
    ///
    /// The phase is fixed from the largest-magnitude amplitude of `other`;
    /// the residual is measured against `abs_tol` times this state's largest
    /// amplitude. Norms must agree for the test to pass: only the phase is
    /// forgiven, not the scale.
    pub fn equal_up_to_global_phase(&self, other: &PureState4, tol: ComplexTolerance) -> bool {
        let mut k_star = 0;
        for k in 1..STATE_DIM {
            if other.amps[k].norm_sqr() > other.amps[k_star].norm_sqr() {
                k_star = k;
            }
        }
        let aligned = self.amps[k_star] * other.amps[k_star].conj();
        let phase = if aligned.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            aligned / aligned.norm()
        };
        let scale = self.amps.iter().map(|z| z.norm()).fold(0.0, f64::max);
        self.amps
            .iter()
            .zip(other.amps.iter())
            .all(|(a, b)| (a - phase * b).norm() <= tol.abs_tol * scale)
    }

    /// Renders the state as a fourq-state-v1 JSON document.
    pub fn to_json(&self) -> String {
        let file = StateFile {
            format: FORMAT_TAG.to_owned(),
            amplitudes: self.amps.iter().map(|z| [z.re, z.im]).collect(),
        };
        serde_json::to_string_pretty(&file).expect("state serialization is infallible")
    }

    /// Parses a fourq-state-v1 JSON document.
    pub fn from_json(text: &str) -> Result<PureState4> {
        let file: StateFile = serde_json::from_str(text).map_err(|e| FourqError::Format {
            detail: e.to_string(),
        })?;
        if file.format != FORMAT_TAG {
            return Err(FourqError::Format {
                detail: format!(
                    "unknown format {:?}, expected {:?}",
                    file.format, FORMAT_TAG
                ),
            });
        }
        if file.amplitudes.len() != STATE_DIM {
            return Err(FourqError::Format {
                detail: format!(
                    "field \"amplitudes\" must hold 16 [re, im] pairs, got {}",
                    file.amplitudes.len()
                ),
            });
        }
        let mut amps = [Complex64::new(0.0, 0.0); STATE_DIM];
        for (slot, pair) in amps.iter_mut().zip(file.amplitudes.iter()) {
            *slot = Complex64::new(pair[0], pair[1]);
        }
        Self::new(amps)
    }
}

#[derive(Serialize, Deserialize)]
struct StateFile {
    format: String,
    amplitudes: Vec<[f64; 2]>,
}

pub(crate) fn c64_as_pair<S: Serializer>(
    z: &Complex64,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ket(k: usize) -> PureState4 {
        let mut amps = [c(0.0, 0.0); STATE_DIM];
        amps[k] = c(1.0, 0.0);
        PureState4::new(amps).unwrap()
    }

    #[test]
    fn basis_index_follows_big_endian_bit_order() {
        assert_eq!(basis_index(0, 0, 0, 0), 0);
        assert_eq!(basis_index(0, 0, 0, 1), 1);
        assert_eq!(basis_index(1, 0, 0, 1), 9);
        assert_eq!(basis_index(1, 1, 1, 1), 15);
    }

    #[test]
    fn basis_index_is_a_bijection() {
        let mut hit = [false; STATE_DIM];
        for q1 in 0..2u8 {
            for q2 in 0..2u8 {
                for q3 in 0..2u8 {
                    for q4 in 0..2u8 {
                        hit[basis_index(q1, q2, q3, q4)] = true;
                    }
                }
            }
        }
        assert!(hit.iter().all(|&h| h));
    }

    #[test]
    #[should_panic(expected = "basis bits")]
    fn basis_index_rejects_non_bits() {
        basis_index(2, 0, 0, 0);
    }

    #[test]
    fn rejects_zero_state() {
        let amps = [c(0.0, 0.0); STATE_DIM];
        assert!(matches!(PureState4::new(amps), Err(FourqError::ZeroState)));
    }

    #[test]
    fn rejects_non_finite_amplitudes() {
        let mut amps = [c(0.0, 0.0); STATE_DIM];
        amps[3] = c(f64::NAN, 0.0);
        assert!(matches!(
            PureState4::new(amps),
            Err(FourqError::NonFinite { index: 3 })
        ));
        amps[3] = c(0.0, f64::INFINITY);
        assert!(matches!(
            PureState4::new(amps),
            Err(FourqError::NonFinite { index: 3 })
        ));
    }

    #[test]
    fn rejects_wrong_length_slices() {
        let amps = vec![c(1.0, 0.0); 15];
        assert!(matches!(
            PureState4::from_slice(&amps),
            Err(FourqError::WrongLength { found: 15 })
        ));
    }

    #[test]
    fn records_the_norm_of_unnormalized_input() {
        let mut amps = [c(0.0, 0.0); STATE_DIM];
        amps[0] = c(3.0, 0.0);
        amps[15] = c(0.0, 4.0);
        let s = PureState4::new(amps).unwrap();
        assert!((s.norm() - 5.0).abs() < 1e-15);
        let n = s.normalized();
        assert!((n.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn scaling_by_zero_is_rejected() {
        assert!(matches!(
            ket(0).scaled(c(0.0, 0.0)),
            Err(FourqError::ZeroState)
        ));
    }

    #[test]
    fn inner_product_conjugates_the_bra() {
        let mut amps = [c(0.0, 0.0); STATE_DIM];
        amps[0] = c(0.0, 1.0);
        let s = PureState4::new(amps).unwrap();
        let p = s.inner_product(&ket(0));
        assert!((p - c(0.0, -1.0)).norm() < 1e-15);
        assert!((s.inner_product(&s) - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn orthogonal_kets_have_zero_overlap() {
        assert_eq!(ket(2).inner_product(&ket(3)), c(0.0, 0.0));
    }

    #[test]
    fn global_phase_equality_accepts_a_phase_and_rejects_scale() {
        let s = ket(5);
        let tol = ComplexTolerance::default();
        let rotated = s.scaled(Complex64::from_polar(1.0, 1.234)).unwrap();
        assert!(s.equal_up_to_global_phase(&rotated, tol));
        let doubled = s.scaled(c(2.0, 0.0)).unwrap();
        assert!(!s.equal_up_to_global_phase(&doubled, tol));
        assert!(!s.equal_up_to_global_phase(&ket(6), tol));
    }

    #[test]
    fn relabel_qubits_moves_amplitudes() {
        // |1000> read through the swap of qubits 1 and 4 becomes |0001>.
        let swapped = ket(8).relabel_qubits([4, 2, 3, 1]).unwrap();
        assert_eq!(swapped.amplitude(1), c(1.0, 0.0));
        assert_eq!(swapped.amplitude(8), c(0.0, 0.0));
    }

    #[test]
    fn relabel_qubits_validates_labels() {
        assert!(matches!(
            ket(0).relabel_qubits([0, 2, 3, 4]),
            Err(FourqError::QubitOutOfRange { qubit: 0 })
        ));
        assert!(matches!(
            ket(0).relabel_qubits([1, 1, 3, 4]),
            Err(FourqError::DuplicateQubit { qubit: 1 })
        ));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let mut amps = [c(0.0, 0.0); STATE_DIM];
        for (k, z) in amps.iter_mut().enumerate() {
            *z = c(0.1 + k as f64 / 7.0, -1.0 / (k as f64 + 3.0));
        }
        let s = PureState4::new(amps).unwrap();
        let back = PureState4::from_json(&s.to_json()).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn json_parse_rejects_unknown_format() {
        let text = r#"{"format": "fourq-state-v2", "amplitudes": []}"#;
        let err = PureState4::from_json(text).unwrap_err();
        assert!(matches!(err, FourqError::Format { .. }));
        assert!(err.to_string().contains("fourq-state-v2"));
    }

    #[test]
    fn json_parse_rejects_wrong_amplitude_count() {
        let text = format!(r#"{{"format": "{FORMAT_TAG}", "amplitudes": [[1.0, 0.0]]}}"#);
        let err = PureState4::from_json(&text).unwrap_err();
        assert!(err.to_string().contains("16"));
    }

    #[test]
    fn json_parse_reports_malformed_documents_with_position() {
        let err = PureState4::from_json("{\"format\": ").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line"), "diagnostic should cite a line: {msg}");
    }

    #[test]
    fn tolerance_construction_validates_signs() {
        assert!(ComplexTolerance::new(1e-10, 1e-9).is_ok());
        assert!(matches!(
            ComplexTolerance::new(0.0, 1e-9),
            Err(FourqError::BadTolerance { .. })
        ));
        assert!(matches!(
            ComplexTolerance::new(1e-10, f64::NAN),
            Err(FourqError::BadTolerance { .. })
        ));
    }
}
