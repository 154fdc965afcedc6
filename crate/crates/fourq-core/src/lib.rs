//! Polynomial SLOCC invariants and local operations for four-qubit pure
//! states.
//!
//! A state lives in `C^16` with amplitude index `k = 8 q1 + 4 q2 + 2 q3 +
//! q4`, qubit 1 being the most significant bit. The crate computes four
//! polynomial invariants of the amplitudes (degrees 2, 4, 4 and 6) that are
//! constant under determinant-1 local operations and scale by fixed powers
//! of the determinant product under general invertible ones. On top of the
//! invariants sit:
//!
//! * orbit comparison with an explicit verdict and rescaling factor
//!   ([`compare_fingerprints`]),
//! * witness checking for a claimed local operation ([`verify_witness`]),
//! * covariance prediction under a known determinant ([`covariance_predict`]),
//! * randomized orbit sweeps measuring numerical invariance
//!   ([`orbit_invariance_report`]),
//! * reduced density matrices and marginal purities ([`partial_trace`],
//!   [`max_entanglement_report`]),
//! * a catalog of named reference states ([`named_state`]).
//!
//! All randomness flows through seeded, indexed substreams ([`substream`]),
//! so every randomized quantity in the crate is reproducible bit for bit.

pub mod catalog;
pub mod entanglement;
pub mod equivalence;
pub mod error;
pub mod invariants;
pub mod local_ops;
pub mod rng;
pub mod state;

pub use num_complex::Complex64;

pub use catalog::{entries as catalog_entries, named_state, CatalogEntry, HALF_INV_SQRT2};
pub use entanglement::{
    max_entanglement_report, parse_subset, partial_trace, MaxEntanglementReport,
    ReducedDensityMatrix, MAXIMALLY_MIXED_TOL,
};
pub use equivalence::{
    compare_fingerprints, covariance_predict, orbit_invariance_report, rel_dev, verify_witness,
    zero_flags, DeviationStat, EquivalenceVerdict, OrbitInvarianceReport, NEAR_ZERO_FLOOR,
};
pub use error::{FourqError, Result};
pub use invariants::{
    fingerprint, inv_dxt, inv_h, inv_l, inv_m, inv_n, InvariantFingerprint, WEIGHTS,
};
pub use local_ops::{
    apply_quartet, apply_single, gate, Gate, LocalOperator, LocalOperatorQuartet, MIN_OPERATOR_DET,
};
pub use rng::substream;
pub use state::{basis_index, ComplexTolerance, PureState4, FORMAT_TAG, STATE_DIM};
