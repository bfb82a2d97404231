//! Exact cohomology of Lie algebras, their representations, and Lie
//! algebroids over the circle.
//!
//! Everything is computed over ℚ with arbitrary-precision integers. The
//! modules build cochain complexes (Chevalley–Eilenberg complexes, truncated
//! circle complexes, pointwise symbol complexes), compute Betti numbers and
//! Euler characteristics, check Künneth identities for products, and expose
//! the Hopf structure on the cohomology of abelian Lie algebras.

pub mod catalog;
pub mod circle;
pub mod error;
pub mod exterior;
pub mod format;
pub mod hopf;
pub mod kunneth;
pub mod liealg;
pub mod linalg;
pub mod rational;
pub mod symbol;

pub use error::{Error, Result};
pub use linalg::{CochainComplex, CohomologyReport, RationalMatrix};
pub use rational::Rational;
