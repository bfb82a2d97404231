use thiserror::Error;

use crate::circle::SweepRow;

/// Errors raised by the cohomology engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chain condition violated: d_{} . d_{} != 0", .degree + 1, .degree)]
    ChainConditionViolated { degree: usize },

    #[error(
        "differential d_{degree} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}"
    )]
    ShapeMismatch {
        degree: usize,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },

    #[error("structure constants violate the Jacobi identity")]
    JacobiViolated,

    #[error("action matrices do not form a representation (flatness fails)")]
    NotARepresentation,

    #[error("anchor map is not a Lie algebra homomorphism into vector fields")]
    NotAnAction,

    #[error("Lie algebra is not abelian")]
    NotAbelian,

    #[error("polynomial has a non-simple zero on the circle")]
    NonsimpleZero,

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("Betti numbers did not stabilize over the requested window range")]
    NotStabilized { table: Vec<SweepRow> },

    #[error("invalid window range {n_min}..={n_max}: need n_min >= 1 and n_max >= n_min + 2")]
    InvalidWindowRange { n_min: usize, n_max: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
