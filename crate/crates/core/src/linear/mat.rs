//! Small dense matrices over exact scalars.
//!
//! `Mat2G` carries the spin side of the story (Gaussian-integer 2×2
//! matrices, enough for every group element this crate ever touches),
//! `Mat3Z` the rotation side, and `Mat4Z` the Lorentz side with metric
//! signature `(+,−,−,−)`.

use std::fmt;
use std::ops::Neg;

use super::gauss::GaussInt;

/// 2×2 matrix with Gaussian-integer entries, row major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2G {
    pub e: [[GaussInt; 2]; 2],
}

impl Mat2G {
    pub const fn new(e: [[GaussInt; 2]; 2]) -> Mat2G {
        Mat2G { e }
    }

    pub const fn identity() -> Mat2G {
        Mat2G::new([
            [GaussInt::ONE, GaussInt::ZERO],
            [GaussInt::ZERO, GaussInt::ONE],
        ])
    }

    pub fn mul(&self, rhs: &Mat2G) -> Mat2G {
        let mut out = [[GaussInt::ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.e[i][0] * rhs.e[0][j] + self.e[i][1] * rhs.e[1][j];
            }
        }
        Mat2G::new(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Mat2G {
        Mat2G::new([
            [self.e[0][0].conj(), self.e[1][0].conj()],
            [self.e[0][1].conj(), self.e[1][1].conj()],
        ])
    }

    pub fn det(&self) -> GaussInt {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn trace(&self) -> GaussInt {
        self.e[0][0] + self.e[1][1]
    }

    pub fn scale(&self, s: GaussInt) -> Mat2G {
        let mut out = self.e;
        for row in &mut out {
            for cell in row {
                *cell = s * *cell;
            }
        }
        Mat2G::new(out)
    }

    /// Exact check that `A·A† = I` and `det A = 1`.
    pub fn is_special_unitary(&self) -> bool {
        self.mul(&self.dagger()) == Mat2G::identity() && self.det() == GaussInt::ONE
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    pub fn inverse_det_one(&self) -> Mat2G {
        debug_assert_eq!(self.det(), GaussInt::ONE);
        Mat2G::new([[self.e[1][1], -self.e[0][1]], [-self.e[1][0], self.e[0][0]]])
    }
}

impl Neg for Mat2G {
    type Output = Mat2G;

    fn neg(self) -> Mat2G {
        self.scale(GaussInt::MINUS_ONE)
    }
}

impl fmt::Display for Mat2G {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

/// 3×3 integer matrix, row major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat3Z {
    pub e: [[i64; 3]; 3],
}

impl Mat3Z {
    pub const fn new(e: [[i64; 3]; 3]) -> Mat3Z {
        Mat3Z { e }
    }

    pub const fn identity() -> Mat3Z {
        Mat3Z::diag(1, 1, 1)
    }

    pub const fn diag(a: i64, b: i64, c: i64) -> Mat3Z {
        Mat3Z::new([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    pub fn mul(&self, rhs: &Mat3Z) -> Mat3Z {
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.e[i][k] * rhs.e[k][j]).sum();
            }
        }
        Mat3Z::new(out)
    }

    pub fn transpose(&self) -> Mat3Z {
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.e[j][i];
            }
        }
        Mat3Z::new(out)
    }

    pub fn det(&self) -> i64 {
        let e = &self.e;
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    }

    /// Exact check that `R·Rᵀ = I` and `det R = 1`.
    pub fn is_rotation(&self) -> bool {
        self.mul(&self.transpose()) == Mat3Z::identity() && self.det() == 1
    }
}

impl fmt::Display for Mat3Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.e.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{},{}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

/// 4×4 integer matrix, row major, indexed `(t, x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat4Z {
    pub e: [[i64; 4]; 4],
}

impl Mat4Z {
    pub const fn new(e: [[i64; 4]; 4]) -> Mat4Z {
        Mat4Z { e }
    }

    pub const fn identity() -> Mat4Z {
        Mat4Z::diag(1, 1, 1, 1)
    }

    pub const fn diag(a: i64, b: i64, c: i64, d: i64) -> Mat4Z {
        Mat4Z::new([[a, 0, 0, 0], [0, b, 0, 0], [0, 0, c, 0], [0, 0, 0, d]])
    }

    /// Minkowski metric `η = diag(1, −1, −1, −1)`.
    pub const fn metric() -> Mat4Z {
        Mat4Z::diag(1, -1, -1, -1)
    }

    /// Space inversion `P = diag(1, −1, −1, −1)`.
    pub const fn parity() -> Mat4Z {
        Mat4Z::diag(1, -1, -1, -1)
    }

    /// Time reversal `T = diag(−1, 1, 1, 1)`.
    pub const fn time_reversal() -> Mat4Z {
        Mat4Z::diag(-1, 1, 1, 1)
    }

    pub fn mul(&self, rhs: &Mat4Z) -> Mat4Z {
        let mut out = [[0i64; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.e[i][k] * rhs.e[k][j]).sum();
            }
        }
        Mat4Z::new(out)
    }

    pub fn transpose(&self) -> Mat4Z {
        let mut out = [[0i64; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.e[j][i];
            }
        }
        Mat4Z::new(out)
    }

    /// Exact check of the Lorentz condition `Λᵀ η Λ = η`.
    pub fn is_lorentz(&self) -> bool {
        self.transpose().mul(&Mat4Z::metric()).mul(self) == Mat4Z::metric()
    }

    /// Inverse of a Lorentz matrix: `Λ⁻¹ = η Λᵀ η`, still integral.
    pub fn lorentz_inverse(&self) -> Mat4Z {
        Mat4Z::metric().mul(&self.transpose()).mul(&Mat4Z::metric())
    }
}

impl fmt::Display for Mat4Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.e.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{},{},{}]", row[0], row[1], row[2], row[3])?;
        }
        write!(f, "]")
    }
}
