use thiserror::Error;

/// Everything that can go wrong while building states, operators, or reports.
#[derive(Debug, Error)]
pub enum FourqError {
    #[error("expected 16 amplitudes, got {found}")]
    WrongLength { found: usize },

    #[error("component {index} is not finite")]
    NonFinite { index: usize },

    #[error("state vector is identically zero")]
    ZeroState,

    #[error("state file rejected: {detail}")]
    Format { detail: String },

    #[error("unknown gate name {name:?}, expected one of I, X, Y, Z, H")]
    UnknownGate { name: String },

    #[error("qubit label {qubit} out of range 1..=4")]
    QubitOutOfRange { qubit: u8 },

    #[error("qubit label {qubit} listed more than once")]
    DuplicateQubit { qubit: u8 },

    #[error("kept-qubit subset is empty")]
    EmptySubset,

    #[error("no catalog state named {name:?}")]
    UnknownName { name: String },

    #[error("operator determinant modulus {modulus:e} is below the invertibility threshold")]
    NotInvertible { modulus: f64 },

    #[error("determinant product is zero, covariance prediction is undefined")]
    ZeroDeterminant,

    #[error("tolerances must be finite and positive, got abs {abs:e} and rel {rel:e}")]
    BadTolerance { abs: f64, rel: f64 },
}

pub type Result<T> = std::result::Result<T, FourqError>;
