//! Gaussian integers `a + bi`, the exact scalar ring for the 2×2 matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Gaussian integer with `i64` real and imaginary parts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt::new(0, 0);
    pub const ONE: GaussInt = GaussInt::new(1, 0);
    pub const MINUS_ONE: GaussInt = GaussInt::new(-1, 0);
    pub const I: GaussInt = GaussInt::new(0, 1);
    pub const MINUS_I: GaussInt = GaussInt::new(0, -1);

    pub const fn new(re: i64, im: i64) -> GaussInt {
        GaussInt { re, im }
    }

    /// Complex conjugate `a − bi`.
    pub const fn conj(self) -> GaussInt {
        GaussInt::new(self.re, -self.im)
    }

    pub const fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl Add for GaussInt {
    type Output = GaussInt;

    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;

    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;

    fn mul(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, 1) => write!(f, "{re}+i"),
            (re, -1) => write!(f, "{re}-i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}
