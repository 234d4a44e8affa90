//! Generalized generating-function expansions for Gegenbauer polynomials.

pub mod error;
pub mod expansions;
pub mod hypergeometric;
pub mod legendre_q;
pub mod orthopoly;
pub mod polyharmonic;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Complex64;
pub use series::{SeriesEvaluation, TruncationPolicy};
