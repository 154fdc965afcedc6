//! Shared fixtures for the benchmark targets.
//!
//! Every fixture is seeded so repeated benchmark runs measure the same
//! inputs; timing differences between runs come from the code, not the data.

use fourq_core::{substream, Complex64, LocalOperatorQuartet, PureState4};
use rand::Rng;

/// Dense state with Gaussian-ish amplitudes, the worst case for the
/// determinant kernels (no zero entries to short-circuit pivoting).
pub fn dense_state(seed: u64) -> PureState4 {
    let mut rng = substream(seed, 0);
    let amplitudes =
        std::array::from_fn(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
    PureState4::new(amplitudes).expect("finite fixture amplitudes")
}

/// Deterministic special-linear quartet for the action benchmarks.
pub fn sl_quartet(seed: u64) -> LocalOperatorQuartet {
    let mut rng = substream(seed, 1);
    LocalOperatorQuartet::random_sl2(&mut rng)
}
