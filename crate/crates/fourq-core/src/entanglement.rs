//! Reduced density matrices and marginal purity.
//!
//! The purity of a k-qubit marginal ranges from `1/2^k` (maximally mixed)
//! to 1 (the complement factors out). States whose single-qubit marginals
//! all sit at purity 1/2 spread their correlations as evenly as a pure
//! four-qubit state can.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{FourqError, Result};
use crate::state::PureState4;

/// Single-qubit marginals within this distance of purity 1/2 count as
/// maximally mixed.
pub const MAXIMALLY_MIXED_TOL: f64 = 1e-10;

/// Density matrix of a subset of qubits, indexed with the lowest kept qubit
/// label as the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensityMatrix {
    kept: Vec<u8>,
    entries: Vec<Vec<Complex64>>,
}

impl ReducedDensityMatrix {
    /// Kept qubit labels, ascending.
    pub fn kept(&self) -> &[u8] {
        &self.kept
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|k| self.entries[k][k]).sum()
    }

    /// Trace of the squared matrix.
    pub fn purity(&self) -> f64 {
        let mut total = 0.0;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                total += (self.entries[r][c] * self.entries[c][r]).re;
            }
        }
        total
    }
}

/// Parses a subset written as a string of qubit digits, for example `"12"`.
pub fn parse_subset(text: &str) -> Result<Vec<u8>> {
    text.trim()
        .chars()
        .map(|ch| {
            ch.to_digit(10)
                .map(|d| d as u8)
                .ok_or_else(|| FourqError::Format {
                    detail: format!("subset must be a string of qubit digits, found {ch:?}"),
                })
        })
        .collect()
}

/// Traces out the complement of `kept`, returning the marginal of the kept
/// qubits. The input is normalized internally so the result has unit trace
/// regardless of the state's norm.
pub fn partial_trace(state: &PureState4, kept: &[u8]) -> Result<ReducedDensityMatrix> {
    if kept.is_empty() {
        return Err(FourqError::EmptySubset);
    }
    let mut sorted = kept.to_vec();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(FourqError::DuplicateQubit { qubit: pair[0] });
        }
    }
    for &q in &sorted {
        if !(1..=4).contains(&q) {
            return Err(FourqError::QubitOutOfRange { qubit: q });
        }
    }

    let traced: Vec<u8> = (1..=4).filter(|q| !sorted.contains(q)).collect();
    let normalized = state.normalized();
    let psi = normalized.amplitudes();

    let place = |labels: &[u8], bits: usize| -> usize {
        let mut k = 0usize;
        for (pos, &q) in labels.iter().enumerate() {
            let bit = (bits >> (labels.len() - 1 - pos)) & 1;
            k |= bit << (4 - q);
        }
        k
    };

    let dim = 1usize << sorted.len();
    let env_dim = 1usize << traced.len();
    let mut entries = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (r, row) in entries.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            for t in 0..env_dim {
                let i = place(&sorted, r) | place(&traced, t);
                let j = place(&sorted, c) | place(&traced, t);
                *entry += psi[i] * psi[j].conj();
            }
        }
    }

    Ok(ReducedDensityMatrix {
        kept: sorted,
        entries,
    })
}

/// Marginal purities of every single qubit and every pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxEntanglementReport {
    pub single: BTreeMap<String, f64>,
    pub pairs: BTreeMap<String, f64>,
    /// True when all four single-qubit marginals are maximally mixed within
    /// [`MAXIMALLY_MIXED_TOL`].
    pub maximally_mixed_singles: bool,
}

/// Computes every single-qubit and two-qubit marginal purity.
pub fn max_entanglement_report(state: &PureState4) -> MaxEntanglementReport {
    let purity_of = |kept: &[u8]| -> f64 {
        partial_trace(state, kept)
            .expect("fixed subsets are valid")
            .purity()
    };

    let mut single = BTreeMap::new();
    for q in 1u8..=4 {
        single.insert(q.to_string(), purity_of(&[q]));
    }

    let mut pairs = BTreeMap::new();
    for a in 1u8..=4 {
        for b in a + 1..=4 {
            pairs.insert(format!("{a}{b}"), purity_of(&[a, b]));
        }
    }

    let maximally_mixed_singles = single
        .values()
        .all(|p| (p - 0.5).abs() <= MAXIMALLY_MIXED_TOL);

    MaxEntanglementReport {
        single,
        pairs,
        maximally_mixed_singles,
    }
}
