//! Exact linear algebra for the concrete group elements: Gaussian-integer
//! spin matrices, integer rotation and Lorentz matrices, rational
//! translations, and the covering maps between the two sides.
//!
//! Everything here is integer or rational arithmetic — no floating point,
//! so every identity asserted elsewhere in the crate is checked exactly.

mod cover;
mod gauss;
mod mat;
mod semidirect;

pub use cover::{block_embed, minus_i_sigma, pauli, phi, phi_double, phi_tilde};
pub use gauss::GaussInt;
pub use mat::{Mat2G, Mat3Z, Mat4Z};
pub use semidirect::{MatrixPart, Rat4, SemidirectElem};

use thiserror::Error;

/// Failures of the exact covering constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    /// The input matrix is outside the special-unitary domain of a covering map.
    #[error("matrix is not special unitary: {0}")]
    NotUnitary(String),
    /// A covering image failed to be an exact integer matrix.
    #[error("covering image is not exactly integral: {0}")]
    NotExact(String),
    /// Two semidirect elements carry matrix parts of different kinds.
    #[error("semidirect parts live on different sides of the covering")]
    KindMismatch,
}
