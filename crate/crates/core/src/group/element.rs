//! Concrete payloads carried by group elements.
//!
//! A `FiniteGroup` is a multiplication table over opaque element ids; the
//! payloads remember what each id *is* (a quaternion unit, a matrix, a
//! residue, a pair, a coset representative) so that maps defined by
//! formulas on values can be materialized as tables.

use std::fmt;

use crate::linear::{Mat2G, Mat3Z, Mat4Z, SemidirectElem};
use crate::quat::QuatUnit;

/// Index of an element within its group's carrier.
pub type ElementId = usize;

/// A residue `value mod modulus`, composed additively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZMod {
    pub value: u64,
    pub modulus: u64,
}

impl ZMod {
    pub fn new(value: u64, modulus: u64) -> ZMod {
        assert!(modulus > 0, "modulus must be positive");
        ZMod {
            value: value % modulus,
            modulus,
        }
    }

    pub fn add(&self, rhs: &ZMod) -> ZMod {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        ZMod::new(self.value + rhs.value, self.modulus)
    }
}

impl fmt::Display for ZMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The value behind a group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    /// A multiplicative integer, e.g. the sign group `{1, −1}`.
    Int(i64),
    /// An additive residue, for cyclic groups.
    ZMod(ZMod),
    /// A quaternion unit.
    Quat(QuatUnit),
    /// A 2×2 spin matrix.
    Mat2(Mat2G),
    /// A 3×3 rotation matrix.
    Mat3(Mat3Z),
    /// A 4×4 Lorentz matrix.
    Mat4(Mat4Z),
    /// A semidirect-product element (translation plus matrix part).
    Semi(SemidirectElem),
    /// An ordered pair, for direct products.
    Pair(Box<Element>, Box<Element>),
    /// A coset, remembered by its canonical representative's payload.
    Coset(Box<Element>),
}

impl Element {
    /// Build a direct-product payload.
    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(v) => write!(f, "{v}"),
            Element::ZMod(z) => write!(f, "{z}"),
            Element::Quat(q) => write!(f, "{q}"),
            Element::Mat2(m) => write!(f, "{m}"),
            Element::Mat3(m) => write!(f, "{m}"),
            Element::Mat4(m) => write!(f, "{m}"),
            Element::Semi(s) => write!(f, "{s}"),
            Element::Pair(a, b) => write!(f, "({a},{b})"),
            Element::Coset(rep) => write!(f, "[{rep}]"),
        }
    }
}

impl From<i64> for Element {
    fn from(v: i64) -> Element {
        Element::Int(v)
    }
}

impl From<ZMod> for Element {
    fn from(z: ZMod) -> Element {
        Element::ZMod(z)
    }
}

impl From<QuatUnit> for Element {
    fn from(q: QuatUnit) -> Element {
        Element::Quat(q)
    }
}

impl From<Mat2G> for Element {
    fn from(m: Mat2G) -> Element {
        Element::Mat2(m)
    }
}

impl From<Mat3Z> for Element {
    fn from(m: Mat3Z) -> Element {
        Element::Mat3(m)
    }
}

impl From<Mat4Z> for Element {
    fn from(m: Mat4Z) -> Element {
        Element::Mat4(m)
    }
}

impl From<SemidirectElem> for Element {
    fn from(s: SemidirectElem) -> Element {
        Element::Semi(s)
    }
}
