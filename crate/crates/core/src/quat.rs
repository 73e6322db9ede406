//! Unit quaternions as an exact eight-element value type.
//!
//! The carrier is `{±1, ±ι, ±γ, ±κ}` with the usual relations
//! `ι² = γ² = κ² = −1`, `ιγ = κ`, `γκ = ι`, `κι = γ`, and the three
//! imaginary units anticommuting. The letters follow the convention used
//! for the Dirac-field symmetry operators; `γ` here is a quaternion unit,
//! not the group homomorphism of the same name elsewhere in this crate.

use std::fmt;
use std::ops::{Mul, Neg};

/// Axis of a unit quaternion: the real unit or one of the three imaginary units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuatAxis {
    One,
    Iota,
    Gamma,
    Kappa,
}

/// A signed quaternion unit, one of the eight elements of the quaternion group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuatUnit {
    pub negative: bool,
    pub axis: QuatAxis,
}

impl QuatUnit {
    pub const ONE: QuatUnit = QuatUnit::pos(QuatAxis::One);
    pub const MINUS_ONE: QuatUnit = QuatUnit::neg(QuatAxis::One);
    pub const IOTA: QuatUnit = QuatUnit::pos(QuatAxis::Iota);
    pub const GAMMA: QuatUnit = QuatUnit::pos(QuatAxis::Gamma);
    pub const KAPPA: QuatUnit = QuatUnit::pos(QuatAxis::Kappa);

    pub const fn pos(axis: QuatAxis) -> QuatUnit {
        QuatUnit {
            negative: false,
            axis,
        }
    }

    pub const fn neg(axis: QuatAxis) -> QuatUnit {
        QuatUnit {
            negative: true,
            axis,
        }
    }

    /// All eight units in a fixed order: `1, −1, ι, −ι, γ, −γ, κ, −κ`.
    pub fn all() -> [QuatUnit; 8] {
        use QuatAxis::*;
        [
            QuatUnit::pos(One),
            QuatUnit::neg(One),
            QuatUnit::pos(Iota),
            QuatUnit::neg(Iota),
            QuatUnit::pos(Gamma),
            QuatUnit::neg(Gamma),
            QuatUnit::pos(Kappa),
            QuatUnit::neg(Kappa),
        ]
    }
}

/// Product of two axes, returned as (sign flip, axis).
fn axis_mul(a: QuatAxis, b: QuatAxis) -> (bool, QuatAxis) {
    use QuatAxis::*;
    match (a, b) {
        (One, x) | (x, One) => (false, x),
        (Iota, Iota) | (Gamma, Gamma) | (Kappa, Kappa) => (true, One),
        (Iota, Gamma) => (false, Kappa),
        (Gamma, Iota) => (true, Kappa),
        (Gamma, Kappa) => (false, Iota),
        (Kappa, Gamma) => (true, Iota),
        (Kappa, Iota) => (false, Gamma),
        (Iota, Kappa) => (true, Gamma),
    }
}

impl Mul for QuatUnit {
    type Output = QuatUnit;

    fn mul(self, rhs: QuatUnit) -> QuatUnit {
        let (flip, axis) = axis_mul(self.axis, rhs.axis);
        QuatUnit {
            negative: self.negative ^ rhs.negative ^ flip,
            axis,
        }
    }
}

impl Neg for QuatUnit {
    type Output = QuatUnit;

    fn neg(self) -> QuatUnit {
        QuatUnit {
            negative: !self.negative,
            axis: self.axis,
        }
    }
}

impl fmt::Display for QuatUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.axis {
            QuatAxis::One => "1",
            QuatAxis::Iota => "ι",
            QuatAxis::Gamma => "γ",
            QuatAxis::Kappa => "κ",
        };
        if self.negative {
            write!(f, "-{name}")
        } else {
            write!(f, "{name}")
        }
    }
}
