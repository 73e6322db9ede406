//! Elements of the (inhomogeneous) semidirect product: a translation
//! four-vector paired with a matrix part.
//!
//! The matrix part is either a 2×2 spin matrix (covering side) or a 4×4
//! Lorentz matrix (base side). Composition follows
//! `(a, A)·(b, B) = (a + act(A)·b, A·B)` where `act(A)` is the Lorentz
//! action of the part on four-vectors — for a spin part, the action of
//! its Lorentz image.

use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use super::cover::phi_tilde;
use super::mat::{Mat2G, Mat4Z};
use super::LinearError;

/// An exact rational four-vector `(t, x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rat4(pub [Rational64; 4]);

impl Rat4 {
    pub fn zero() -> Rat4 {
        Rat4([Rational64::zero(); 4])
    }

    pub fn from_ints(v: [i64; 4]) -> Rat4 {
        Rat4(v.map(Rational64::from_integer))
    }

    pub fn add(&self, rhs: &Rat4) -> Rat4 {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(rhs.0.iter()) {
            *a += *b;
        }
        Rat4(out)
    }

    pub fn neg(&self) -> Rat4 {
        Rat4(self.0.map(|c| -c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational64::is_zero)
    }

    /// Apply an integer Lorentz matrix to this vector.
    pub fn apply(&self, m: &Mat4Z) -> Rat4 {
        let mut out = [Rational64::zero(); 4];
        for (i, cell) in out.iter_mut().enumerate() {
            for (j, c) in self.0.iter().enumerate() {
                *cell += Rational64::from_integer(m.e[i][j]) * c;
            }
        }
        Rat4(out)
    }
}

impl fmt::Display for Rat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(
            f,
            "({},{},{},{})",
            self.0[0], self.0[1], self.0[2], self.0[3]
        )
    }
}

/// The matrix half of a semidirect-product element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixPart {
    Spin(Mat2G),
    Lorentz(Mat4Z),
}

impl MatrixPart {
    /// Lorentz action of this part on four-vectors.
    fn action(&self) -> Result<Mat4Z, LinearError> {
        match self {
            MatrixPart::Spin(a) => phi_tilde(a),
            MatrixPart::Lorentz(m) => Ok(*m),
        }
    }

    fn inverse(&self) -> MatrixPart {
        match self {
            MatrixPart::Spin(a) => MatrixPart::Spin(a.inverse_det_one()),
            MatrixPart::Lorentz(m) => MatrixPart::Lorentz(m.lorentz_inverse()),
        }
    }
}

impl fmt::Display for MatrixPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixPart::Spin(a) => write!(f, "{a}"),
            MatrixPart::Lorentz(m) => write!(f, "{m}"),
        }
    }
}

/// A translation together with a matrix part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SemidirectElem {
    pub translation: Rat4,
    pub part: MatrixPart,
}

impl SemidirectElem {
    pub fn new(translation: Rat4, part: MatrixPart) -> SemidirectElem {
        SemidirectElem { translation, part }
    }

    /// The element `(0, part)`.
    pub fn zero_translation(part: MatrixPart) -> SemidirectElem {
        SemidirectElem::new(Rat4::zero(), part)
    }

    pub fn identity_spin() -> SemidirectElem {
        SemidirectElem::zero_translation(MatrixPart::Spin(Mat2G::identity()))
    }

    pub fn identity_lorentz() -> SemidirectElem {
        SemidirectElem::zero_translation(MatrixPart::Lorentz(Mat4Z::identity()))
    }

    /// `(a, A)·(b, B) = (a + act(A)·b, A·B)`.
    ///
    /// Fails with `KindMismatch` when the parts live on different sides of
    /// the covering, and propagates action errors for out-of-scope spin
    /// parts.
    pub fn compose(&self, rhs: &SemidirectElem) -> Result<SemidirectElem, LinearError> {
        let part = match (&self.part, &rhs.part) {
            (MatrixPart::Spin(a), MatrixPart::Spin(b)) => MatrixPart::Spin(a.mul(b)),
            (MatrixPart::Lorentz(a), MatrixPart::Lorentz(b)) => MatrixPart::Lorentz(a.mul(b)),
            _ => return Err(LinearError::KindMismatch),
        };
        let moved = if rhs.translation.is_zero() {
            // Common case for the finite groups here; skips the action.
            rhs.translation
        } else {
            rhs.translation.apply(&self.part.action()?)
        };
        Ok(SemidirectElem::new(self.translation.add(&moved), part))
    }

    /// `(a, A)⁻¹ = (−act(A⁻¹)·a, A⁻¹)`.
    pub fn inverse(&self) -> Result<SemidirectElem, LinearError> {
        let inv = self.part.inverse();
        let back = if self.translation.is_zero() {
            self.translation
        } else {
            self.translation.apply(&inv.action()?).neg()
        };
        Ok(SemidirectElem::new(back, inv))
    }
}

impl fmt::Display for SemidirectElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.translation, self.part)
    }
}
