use fourq_core::{substream, Complex64, PureState4, STATE_DIM};
use rand::Rng;

/// Deterministic Gaussian-amplitude state drawn from the `(seed, index)`
/// substream.
pub fn gaussian_state(seed: u64, index: u64) -> PureState4 {
    let mut rng = substream(seed, index);
    let mut amps = [Complex64::new(0.0, 0.0); STATE_DIM];
    for z in &mut amps {
        *z = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
    }
    PureState4::new(amps).expect("gaussian draws are finite and nonzero")
}
