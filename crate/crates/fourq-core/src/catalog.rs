//! Named reference states used throughout the tests and the command line.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{FourqError, Result};
use crate::state::{PureState4, STATE_DIM};

/// `1 / (2 sqrt 2)`, the amplitude magnitude of the eight-term states.
pub const HALF_INV_SQRT2: f64 = 0.5 * std::f64::consts::FRAC_1_SQRT_2;

/// A catalog row: the lookup name and a short note on where the state comes
/// from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub provenance: &'static str,
}

const ENTRIES: [CatalogEntry; 7] = [
    CatalogEntry {
        name: "chi",
        provenance: "genuinely four-party entangled channel of Yeo and Chua, \
                     Phys. Rev. Lett. 96, 060502 (2006)",
    },
    CatalogEntry {
        name: "phi_m1",
        provenance: "image of chi under Hadamards on qubits 1, 2 and 3",
    },
    CatalogEntry {
        name: "phi_m2",
        provenance: "image of chi under X on qubit 1 and Hadamards on qubits 2, 3 and 4",
    },
    CatalogEntry {
        name: "ghz4",
        provenance: "four-qubit Greenberger-Horne-Zeilinger state",
    },
    CatalogEntry {
        name: "w4",
        provenance: "four-qubit W state",
    },
    CatalogEntry {
        name: "cluster4",
        provenance: "linear cluster state on four qubits",
    },
    CatalogEntry {
        name: "zero_ket",
        provenance: "computational basis state |0000>",
    },
];

/// All catalog rows in their canonical order.
pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

fn sparse(terms: &[(usize, f64)]) -> PureState4 {
    let mut amps = [Complex64::new(0.0, 0.0); STATE_DIM];
    for &(k, value) in terms {
        amps[k] = Complex64::new(value, 0.0);
    }
    PureState4::new(amps).expect("catalog amplitudes are valid")
}

/// Looks up a catalog state by name.
pub fn named_state(name: &str) -> Result<PureState4> {
    let x = HALF_INV_SQRT2;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    match name {
        "chi" => Ok(sparse(&[
            (0, x),
            (3, -x),
            (5, -x),
            (6, x),
            (9, x),
            (10, x),
            (12, x),
            (15, x),
        ])),
        "phi_m1" => Ok(sparse(&[(0, 0.5), (7, 0.5), (9, -0.5), (14, 0.5)])),
        "phi_m2" => Ok(sparse(&[(0, 0.5), (7, -0.5), (9, 0.5), (14, 0.5)])),
        "ghz4" => Ok(sparse(&[(0, r), (15, r)])),
        "w4" => Ok(sparse(&[(1, 0.5), (2, 0.5), (4, 0.5), (8, 0.5)])),
        "cluster4" => Ok(sparse(&[(0, 0.5), (3, 0.5), (12, 0.5), (15, -0.5)])),
        "zero_ket" => Ok(sparse(&[(0, 1.0)])),
        other => Err(FourqError::UnknownName {
            name: other.to_string(),
        }),
    }
}
