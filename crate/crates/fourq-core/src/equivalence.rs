//! Fingerprint comparison up to determinant rescaling, plus numerical
//! diagnostics built on it.
//!
//! Two states on the same invertible-local-operation orbit have fingerprints
//! related by `(d h, d^2 l, d^2 m, d^3 dxt)` for a single nonzero `d`.
//! Comparison therefore has three outcomes: the zero patterns differ (no
//! rescaling can fix that), a common rescaling factor exists (necessary but
//! not by itself sufficient for orbit equality), or every component of both
//! fingerprints vanishes and the invariants simply carry no information.
//!
//! Zero detection uses a two-term threshold. Component `i` with weight
//! `w_i` counts as zero when `|f_i|` is below either
//!
//! * `abs_tol * s^{w_i}` with `s` the fingerprint's own weighted scale
//!   (see [`InvariantFingerprint::scale`]), the relative part, or
//! * `K * epsilon * r^{w_i}` with `r` the source state's squared norm, the
//!   evaluation noise floor.
//!
//! The first term makes the classification independent of rescaling: both
//! sides scale identically when the amplitudes are multiplied by a
//! constant. The second term is needed for states whose invariants vanish
//! identically: after a determinant-1 quartet their recomputed components
//! are pure rounding residue of size `epsilon * r^{w_i}`, which the
//! residue-dominated scale `s` cannot recognize as noise on its own. Values
//! below the noise floor of their own evaluation carry no information, so
//! they classify as zero.

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{FourqError, Result};
use crate::invariants::{fingerprint, inv_n, InvariantFingerprint, WEIGHTS};
use crate::local_ops::{apply_quartet, LocalOperatorQuartet};
use crate::rng::substream;
use crate::state::{ComplexTolerance, PureState4};

/// Magnitudes below this floor are treated as zero when forming relative
/// deviations, so comparisons of exactly vanishing invariants report 0
/// instead of amplifying rounding residue.
pub const NEAR_ZERO_FLOOR: f64 = 1e-12;

/// Multiple of machine epsilon bounding the rounding error of one invariant
/// evaluation, relative to the weight-matched power of the state's squared
/// norm. The degree-6 component is the worst case (quadratic entries
/// followed by a pivoted 3x3 determinant); 256 ulps covers it with an order
/// of magnitude to spare while staying far below `abs_tol`.
const EVALUATION_NOISE_ULPS: f64 = 256.0;

/// Outcome of comparing two fingerprints.
#[derive(Debug, Clone, PartialEq)]
pub enum EquivalenceVerdict {
    /// A single rescaling factor aligns every nonzero component. `lambda`
    /// maps the first fingerprint onto the second.
    InvariantEquivalent { lambda: Complex64, reason: String },
    /// No rescaling factor can align the fingerprints.
    NotEquivalent { reason: String },
    /// Both fingerprints vanish identically; the invariants cannot separate
    /// these states.
    DegenerateInconclusive { reason: String },
}

impl EquivalenceVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            EquivalenceVerdict::InvariantEquivalent { .. } => "InvariantEquivalent",
            EquivalenceVerdict::NotEquivalent { .. } => "NotEquivalent",
            EquivalenceVerdict::DegenerateInconclusive { .. } => "DegenerateInconclusive",
        }
    }

    pub fn lambda(&self) -> Option<Complex64> {
        match self {
            EquivalenceVerdict::InvariantEquivalent { lambda, .. } => Some(*lambda),
            _ => None,
        }
    }

    pub fn reason(&self) -> &str {
        match self {
            EquivalenceVerdict::InvariantEquivalent { reason, .. }
            | EquivalenceVerdict::NotEquivalent { reason }
            | EquivalenceVerdict::DegenerateInconclusive { reason } => reason,
        }
    }
}

impl Serialize for EquivalenceVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EquivalenceVerdict", 3)?;
        s.serialize_field("kind", self.kind())?;
        let lambda = self.lambda().map(|l| [l.re, l.im]);
        s.serialize_field("lambda", &lambda)?;
        s.serialize_field("reason", self.reason())?;
        s.end()
    }
}

/// Marks each component as effectively zero: below `abs_tol` relative to
/// the fingerprint's weighted scale, or below the evaluation noise floor of
/// a state with the fingerprint's `ref_scale`. An identically vanishing
/// fingerprint marks all four.
pub fn zero_flags(f: &InvariantFingerprint, abs_tol: f64) -> [bool; 4] {
    let s = f.scale();
    if s == 0.0 {
        return [true; 4];
    }
    let noise = EVALUATION_NOISE_ULPS * f64::EPSILON;
    let mut flags = [false; 4];
    for (i, (z, w)) in f.components().iter().zip(WEIGHTS.iter()).enumerate() {
        let exp = *w as i32;
        let threshold = (abs_tol * s.powi(exp)).max(noise * f.ref_scale.powi(exp));
        flags[i] = z.norm() < threshold;
    }
    flags
}

fn lambda_candidates(ratio: Complex64, weight: u32) -> Vec<Complex64> {
    match weight {
        1 => vec![ratio],
        2 => {
            let s = ratio.sqrt();
            vec![s, -s]
        }
        3 => {
            let c = ratio.cbrt();
            let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
            vec![c, c * omega, c * omega * omega]
        }
        _ => unreachable!("weights are 1, 2, or 3"),
    }
}

/// Compares two fingerprints up to determinant-power rescaling.
///
/// The zero patterns must agree (an invertible local operation can never
/// create or destroy a vanishing invariant). When they do, the rescaling
/// factor is solved from the lowest-weight nonzero component and accepted
/// only if every other nonzero component matches it within `tol.rel_tol`.
pub fn compare_fingerprints(
    u: &InvariantFingerprint,
    v: &InvariantFingerprint,
    tol: ComplexTolerance,
) -> EquivalenceVerdict {
    let zu = zero_flags(u, tol.abs_tol);
    let zv = zero_flags(v, tol.abs_tol);
    let names = InvariantFingerprint::component_names();

    if zu != zv {
        let i = (0..4).find(|&i| zu[i] != zv[i]).expect("patterns differ");
        let (vanishing, surviving) = if zu[i] {
            ("first", "second")
        } else {
            ("second", "first")
        };
        return EquivalenceVerdict::NotEquivalent {
            reason: format!(
                "invariant {} vanishes for the {} state but not the {}; \
                 no invertible local operation changes which invariants vanish",
                names[i], vanishing, surviving
            ),
        };
    }

    if zu == [true; 4] {
        return EquivalenceVerdict::DegenerateInconclusive {
            reason: "every polynomial invariant vanishes for both states, so the fingerprint \
                     carries no information about whether their orbits coincide"
                .to_string(),
        };
    }

    let uc = u.components();
    let vc = v.components();
    let pivot = (0..4).find(|&i| !zu[i]).expect("some component is nonzero");
    let candidates = lambda_candidates(vc[pivot] / uc[pivot], WEIGHTS[pivot]);

    for lambda in candidates {
        let mut all_match = true;
        for i in 0..4 {
            if zu[i] {
                continue;
            }
            let predicted = lambda.powu(WEIGHTS[i]) * uc[i];
            let denom = predicted.norm().max(vc[i].norm());
            if (predicted - vc[i]).norm() > tol.rel_tol * denom {
                all_match = false;
                break;
            }
        }
        if all_match {
            return EquivalenceVerdict::InvariantEquivalent {
                lambda,
                reason: format!(
                    "all nonzero invariants agree after rescaling by powers of \
                     lambda = {:.6e}{:+.6e}i; matching invariants are necessary for \
                     SLOCC equivalence but do not establish it on their own",
                    lambda.re, lambda.im
                ),
            };
        }
    }

    EquivalenceVerdict::NotEquivalent {
        reason: format!(
            "no rescaling factor solved from invariant {} aligns the remaining nonzero \
             invariants within the relative tolerance",
            names[pivot]
        ),
    }
}

/// Predicts the fingerprint of a state after an invertible quartet with
/// determinant product `d`, without applying the quartet.
pub fn covariance_predict(f: &InvariantFingerprint, d: Complex64) -> Result<InvariantFingerprint> {
    if d.norm() == 0.0 {
        return Err(FourqError::ZeroDeterminant);
    }
    Ok(InvariantFingerprint {
        h: d * f.h,
        l: d.powu(2) * f.l,
        m: d.powu(2) * f.m,
        dxt: d.powu(3) * f.dxt,
        // The reference magnitude is a weight-1 quantity.
        ref_scale: d.norm() * f.ref_scale,
    })
}

/// Checks whether `b` is proportional to the image of `a` under the quartet.
///
/// The proportionality constant is fixed at the image's largest amplitude
/// and every component must then agree within `abs_tol` relative to the
/// largest magnitude involved.
pub fn verify_witness(
    quartet: &LocalOperatorQuartet,
    a: &PureState4,
    b: &PureState4,
    tol: ComplexTolerance,
) -> bool {
    let t = apply_quartet(quartet, a)
        .expect("an invertible quartet maps a valid state to a valid state");
    let ta = t.amplitudes();
    let ba = b.amplitudes();

    let mut pivot = 0;
    for (k, z) in ta.iter().enumerate() {
        if z.norm_sqr() > ta[pivot].norm_sqr() {
            pivot = k;
        }
    }
    let c = ba[pivot] / ta[pivot];

    let mut reference: f64 = 0.0;
    for k in 0..ta.len() {
        reference = reference.max((c * ta[k]).norm()).max(ba[k].norm());
    }
    ta.iter()
        .zip(ba.iter())
        .all(|(t_k, b_k)| (c * t_k - b_k).norm() <= tol.abs_tol * reference)
}

/// Relative deviation of two complex values, floored so that a pair of
/// magnitudes below [`NEAR_ZERO_FLOOR`] counts as exact agreement.
pub fn rel_dev(a: Complex64, b: Complex64) -> f64 {
    let denom = a.norm().max(b.norm());
    if denom <= NEAR_ZERO_FLOOR {
        0.0
    } else {
        (a - b).norm() / denom
    }
}

/// Worst observed relative deviation of one invariant over an orbit sweep.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DeviationStat {
    pub max_rel_dev: f64,
    pub worst_sample: usize,
}

/// Per-invariant deviation statistics over random determinant-1 quartets.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct OrbitInvarianceReport {
    #[serde(rename = "H")]
    pub h: DeviationStat,
    #[serde(rename = "L")]
    pub l: DeviationStat,
    #[serde(rename = "M")]
    pub m: DeviationStat,
    #[serde(rename = "Dxt")]
    pub dxt: DeviationStat,
    #[serde(rename = "N3")]
    pub n3: DeviationStat,
}

/// Sweeps `samples` random determinant-1 quartets over the state's orbit and
/// records, for each invariant, the largest relative deviation from the
/// untransformed value and the sample index where it occurred.
///
/// Sample `i` draws its quartet from the decorrelated substream
/// `(seed, i)`, so reports are reproducible and insensitive to sample count.
///
/// # Panics
///
/// Panics if `samples` is zero.
pub fn orbit_invariance_report(
    state: &PureState4,
    samples: usize,
    seed: u64,
) -> OrbitInvarianceReport {
    assert!(samples >= 1, "orbit sweep needs at least one sample");
    let evaluate = |s: &PureState4| {
        let f = fingerprint(s);
        [f.h, f.l, f.m, f.dxt, inv_n(s)]
    };
    let base = evaluate(state);
    let mut stats = [DeviationStat {
        max_rel_dev: 0.0,
        worst_sample: 0,
    }; 5];

    for i in 0..samples {
        let mut rng = substream(seed, i as u64);
        let quartet = LocalOperatorQuartet::random_sl2(&mut rng);
        let moved = apply_quartet(&quartet, state)
            .expect("an invertible quartet maps a valid state to a valid state");
        let values = evaluate(&moved);
        for (stat, (value, reference)) in stats.iter_mut().zip(values.iter().zip(base.iter())) {
            let dev = rel_dev(*value, *reference);
            if dev > stat.max_rel_dev {
                stat.max_rel_dev = dev;
                stat.worst_sample = i;
            }
        }
    }

    let [h, l, m, dxt, n3] = stats;
    OrbitInvarianceReport { h, l, m, dxt, n3 }
}
