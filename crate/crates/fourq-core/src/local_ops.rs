//! Invertible single-qubit operators and their action on four-qubit states.
//!
//! A [`LocalOperatorQuartet`] acts as `A (x) B (x) C (x) D`, one factor per
//! qubit. Determinants are cached at construction and multiply under
//! composition, so the determinant product of a quartet, the quantity the
//! invariants scale by, is available without re-elimination.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{FourqError, Result};
use crate::state::{PureState4, STATE_DIM};

/// Smallest determinant modulus accepted for an operator. Anything below
/// this is treated as numerically singular.
pub const MIN_OPERATOR_DET: f64 = 1e-12;

/// Resampling threshold for the random samplers: candidates with
/// `|det| < GL_MIN_DET` are discarded so the rejection loop never emits a
/// near-singular factor and terminates quickly.
const GL_MIN_DET: f64 = 0.1;

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// An invertible 2x2 complex matrix acting on one qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalOperator {
    entries: [[Complex64; 2]; 2],
    det: Complex64,
}

impl LocalOperator {
    /// Validates finiteness and invertibility, caching the determinant.
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        for (r, row) in entries.iter().enumerate() {
            for (c, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(FourqError::NonFinite { index: 2 * r + c });
                }
            }
        }
        let det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
        if det.norm() < MIN_OPERATOR_DET {
            return Err(FourqError::NotInvertible {
                modulus: det.norm(),
            });
        }
        Ok(Self { entries, det })
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    pub fn det(&self) -> Complex64 {
        self.det
    }

    /// Matrix product `self * rhs`. The cached determinant multiplies, so
    /// composing special-linear factors keeps the product determinant at 1
    /// without accumulating elimination error.
    pub fn compose(&self, rhs: &LocalOperator) -> LocalOperator {
        let a = &self.entries;
        let b = &rhs.entries;
        let mut entries = [[Complex64::new(0.0, 0.0); 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                entries[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        LocalOperator {
            entries,
            det: self.det * rhs.det,
        }
    }

    /// Haar-distributed special unitary: a Gaussian pair normalized onto the
    /// unit 3-sphere, arranged so the determinant is `|a|^2 + |b|^2 = 1`.
    pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> LocalOperator {
        loop {
            let a = complex_gaussian(rng);
            let b = complex_gaussian(rng);
            let n2 = a.norm_sqr() + b.norm_sqr();
            if n2 < 1e-12 {
                continue;
            }
            let scale = 1.0 / n2.sqrt();
            let a = scale * a;
            let b = scale * b;
            let entries = [[a, b], [-b.conj(), a.conj()]];
            return LocalOperator::new(entries).expect("normalized pair is invertible");
        }
    }

    /// Random determinant-1 operator: Gaussian entries, rejected while the
    /// determinant modulus is below [`GL_MIN_DET`], then divided by the
    /// principal square root of the determinant.
    pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R) -> LocalOperator {
        loop {
            let entries = [
                [complex_gaussian(rng), complex_gaussian(rng)],
                [complex_gaussian(rng), complex_gaussian(rng)],
            ];
            let det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
            if det.norm() < GL_MIN_DET {
                continue;
            }
            let s = det.sqrt();
            let scaled = entries.map(|row| row.map(|z| z / s));
            return LocalOperator::new(scaled).expect("rescaled determinant is 1");
        }
    }

    /// Random invertible operator: Gaussian entries, rejected while the
    /// determinant modulus is below [`GL_MIN_DET`].
    pub fn random_gl2<R: Rng + ?Sized>(rng: &mut R) -> LocalOperator {
        loop {
            let entries = [
                [complex_gaussian(rng), complex_gaussian(rng)],
                [complex_gaussian(rng), complex_gaussian(rng)],
            ];
            let det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
            if det.norm() >= GL_MIN_DET {
                return LocalOperator::new(entries).expect("determinant checked above");
            }
        }
    }
}

/// The named single-qubit gates accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    I,
    X,
    Y,
    Z,
    H,
}

impl Gate {
    /// Case-insensitive parse of a gate letter.
    pub fn parse(name: &str) -> Result<Gate> {
        match name.trim().to_ascii_uppercase().as_str() {
            "I" => Ok(Gate::I),
            "X" => Ok(Gate::X),
            "Y" => Ok(Gate::Y),
            "Z" => Ok(Gate::Z),
            "H" => Ok(Gate::H),
            _ => Err(FourqError::UnknownGate {
                name: name.trim().to_string(),
            }),
        }
    }

    pub fn operator(self) -> LocalOperator {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let r = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let entries = match self {
            Gate::I => [[one, z], [z, one]],
            Gate::X => [[z, one], [one, z]],
            Gate::Y => [[z, -i], [i, z]],
            Gate::Z => [[one, z], [z, -one]],
            Gate::H => [[r, r], [r, -r]],
        };
        LocalOperator::new(entries).expect("gate matrices are invertible")
    }
}

/// Looks up a named gate as an operator.
pub fn gate(name: &str) -> Result<LocalOperator> {
    Gate::parse(name).map(Gate::operator)
}

/// One operator per qubit, applied as `A (x) B (x) C (x) D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalOperatorQuartet {
    ops: [LocalOperator; 4],
}

impl LocalOperatorQuartet {
    pub fn new(ops: [LocalOperator; 4]) -> Self {
        Self { ops }
    }

    /// Parses a comma-separated list of exactly four gate letters, for
    /// example `"H,H,H,I"`. Whitespace around letters is ignored.
    pub fn parse(list: &str) -> Result<Self> {
        let parts: Vec<&str> = list.split(',').collect();
        if parts.len() != 4 {
            return Err(FourqError::Format {
                detail: format!("expected 4 comma-separated gates, found {}", parts.len()),
            });
        }
        let mut ops = [Gate::I.operator(); 4];
        for (slot, part) in ops.iter_mut().zip(parts.iter()) {
            *slot = gate(part)?;
        }
        Ok(Self { ops })
    }

    pub fn ops(&self) -> &[LocalOperator; 4] {
        &self.ops
    }

    /// Product of the four factor determinants, the quantity the invariants
    /// scale by.
    pub fn det_product(&self) -> Complex64 {
        self.ops.iter().map(LocalOperator::det).product()
    }

    pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(std::array::from_fn(|_| LocalOperator::random_su2(rng)))
    }

    pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(std::array::from_fn(|_| LocalOperator::random_sl2(rng)))
    }

    pub fn random_gl2<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(std::array::from_fn(|_| LocalOperator::random_gl2(rng)))
    }
}

/// Applies a single-qubit operator to one qubit (1 through 4, qubit 1 being
/// the most significant bit of the amplitude index).
pub fn apply_single(op: &LocalOperator, qubit: u8, state: &PureState4) -> Result<PureState4> {
    if !(1..=4).contains(&qubit) {
        return Err(FourqError::QubitOutOfRange { qubit });
    }
    let step = 1usize << (4 - qubit);
    let a = state.amplitudes();
    let m = op.entries();
    let mut out = [Complex64::new(0.0, 0.0); STATE_DIM];
    for k in 0..STATE_DIM {
        if k & step == 0 {
            let lo = a[k];
            let hi = a[k | step];
            out[k] = m[0][0] * lo + m[0][1] * hi;
            out[k | step] = m[1][0] * lo + m[1][1] * hi;
        }
    }
    PureState4::new(out)
}

/// Applies one operator per qubit. Factors act on disjoint tensor slots, so
/// the application order does not matter.
pub fn apply_quartet(quartet: &LocalOperatorQuartet, state: &PureState4) -> Result<PureState4> {
    let mut current = state.clone();
    for (idx, op) in quartet.ops().iter().enumerate() {
        current = apply_single(op, idx as u8 + 1, &current)?;
    }
    Ok(current)
}
