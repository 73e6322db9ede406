//! The spin covering homomorphisms, computed exactly.
//!
//! `phi` sends a special-unitary 2×2 matrix `A` to the 3×3 rotation it
//! induces by conjugation on the Pauli basis, entry by entry as
//! `R_jk = ½·tr(σ_j A σ_k A†)`; equivalently `A σ_k A† = Σ_j R_jk σ_j`.
//! `phi_tilde` is the same construction with `σ_0 = I` adjoined, which for
//! unitary `A` lands in the block form `diag(1, phi(A))`. Both are
//! two-to-one: `A` and `−A` have the same image. `phi_double` extends the
//! covering to semidirect-product elements by acting on the matrix part
//! and leaving the translation alone.

use super::gauss::GaussInt;
use super::mat::{Mat2G, Mat3Z, Mat4Z};
use super::semidirect::{MatrixPart, SemidirectElem};
use super::LinearError;

/// The Pauli matrix `σ_k` for `k ∈ {1, 2, 3}`.
///
/// Panics on any other index.
pub fn pauli(k: usize) -> Mat2G {
    match k {
        1 => Mat2G::new([
            [GaussInt::ZERO, GaussInt::ONE],
            [GaussInt::ONE, GaussInt::ZERO],
        ]),
        2 => Mat2G::new([
            [GaussInt::ZERO, GaussInt::MINUS_I],
            [GaussInt::I, GaussInt::ZERO],
        ]),
        3 => Mat2G::new([
            [GaussInt::ONE, GaussInt::ZERO],
            [GaussInt::ZERO, GaussInt::MINUS_ONE],
        ]),
        _ => panic!("pauli index must be 1, 2, or 3, got {k}"),
    }
}

/// `−i·σ_k`, the images of the quaternion units on the spin side.
pub fn minus_i_sigma(k: usize) -> Mat2G {
    pauli(k).scale(GaussInt::MINUS_I)
}

/// Half of an exactly-even real trace, or an exactness error.
fn half_trace(t: GaussInt, what: &str) -> Result<i64, LinearError> {
    if t.im != 0 || t.re % 2 != 0 {
        return Err(LinearError::NotExact(format!(
            "{what}: trace {t} is not an even integer"
        )));
    }
    Ok(t.re / 2)
}

/// The rotation induced by a special-unitary matrix on the Pauli basis.
pub fn phi(a: &Mat2G) -> Result<Mat3Z, LinearError> {
    if !a.is_special_unitary() {
        return Err(LinearError::NotUnitary(a.to_string()));
    }
    let ad = a.dagger();
    let mut r = [[0i64; 3]; 3];
    for (j, row) in r.iter_mut().enumerate() {
        for (k, cell) in row.iter_mut().enumerate() {
            let m = pauli(j + 1).mul(a).mul(&pauli(k + 1)).mul(&ad);
            *cell = half_trace(m.trace(), "rotation entry")?;
        }
    }
    let r = Mat3Z::new(r);
    debug_assert!(r.is_rotation(), "covering image {r} is not a rotation");
    Ok(r)
}

/// The Lorentz matrix induced by a special-unitary matrix, from the
/// four-index trace formula with `σ_0 = I`.
pub fn phi_tilde(a: &Mat2G) -> Result<Mat4Z, LinearError> {
    if !a.is_special_unitary() {
        return Err(LinearError::NotUnitary(a.to_string()));
    }
    let sig = [Mat2G::identity(), pauli(1), pauli(2), pauli(3)];
    let ad = a.dagger();
    let mut l = [[0i64; 4]; 4];
    for (mu, row) in l.iter_mut().enumerate() {
        for (nu, cell) in row.iter_mut().enumerate() {
            let m = sig[mu].mul(a).mul(&sig[nu]).mul(&ad);
            *cell = half_trace(m.trace(), "Lorentz entry")?;
        }
    }
    let l = Mat4Z::new(l);
    debug_assert!(l.is_lorentz(), "covering image {l} is not Lorentz");
    Ok(l)
}

/// Embed a rotation as the spatial block of a Lorentz matrix.
pub fn block_embed(r: &Mat3Z) -> Mat4Z {
    debug_assert!(r.is_rotation());
    let mut out = [[0i64; 4]; 4];
    out[0][0] = 1;
    for i in 0..3 {
        for j in 0..3 {
            out[i + 1][j + 1] = r.e[i][j];
        }
    }
    Mat4Z::new(out)
}

/// Push a spin semidirect element down the covering:
/// `(a, A) ↦ (a, phi_tilde(A))`.
pub fn phi_double(x: &SemidirectElem) -> Result<SemidirectElem, LinearError> {
    match &x.part {
        MatrixPart::Spin(a) => Ok(SemidirectElem::new(
            x.translation,
            MatrixPart::Lorentz(phi_tilde(a)?),
        )),
        MatrixPart::Lorentz(m) => Err(LinearError::NotUnitary(format!(
            "phi_double expects a spin part, got Lorentz part {m}"
        ))),
    }
}
