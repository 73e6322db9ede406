//! Finite group engine: table groups, verified homomorphisms,
//! isomorphism search, and a catalog of reference groups.

pub mod catalog;
pub mod element;
pub mod finite;
pub mod iso;
pub mod map;

pub use catalog::Catalog;
pub use element::{Element, ElementId, ZMod};
pub use finite::{close, CayleyTable, FiniteGroup, DEFAULT_ORDER_CAP};
pub use iso::{fingerprint, greedy_generators, is_isomorphic, Fingerprint};
pub use map::GroupMap;

/// Errors from group construction and map algebra.
#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    /// A closure or product would exceed the configured size bound.
    #[error("closure exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },

    /// A table failed one of the group laws; the message carries the witness.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// A quotient was requested by a set that is not a normal subgroup.
    #[error("not a normal subgroup: {0}")]
    NotNormal(String),

    /// An image assignment breaks the homomorphism law at x·y.
    #[error("not a homomorphism at {x}·{y} = {xy}: {detail}")]
    NotAHomomorphism {
        x: String,
        y: String,
        xy: String,
        detail: String,
    },

    /// No catalog entry matches the group.
    #[error("group not in catalog: {0}")]
    NotInCatalog(String),

    /// An element id outside the carrier was used.
    #[error("element id {id} out of range for a group of order {order}")]
    BadElementId { id: usize, order: usize },

    /// Fibers over the image have unequal sizes.
    #[error("non-uniform fibers: {0}")]
    NonUniformFibers(String),

    /// Two maps were composed across mismatched group objects.
    #[error("maps are not composable: {0}")]
    NotComposable(String),

    /// An inverse was requested of a non-bijective map.
    #[error("map {0} is not bijective")]
    NotBijective(String),

    /// A generator of the domain has no assigned image.
    #[error("no image assigned for generator {0}")]
    MissingGeneratorImage(String),

    /// Elements that cannot be multiplied (mixed kinds, inexact results).
    #[error("element payload error: {0}")]
    Payload(String),

    /// Closure was requested from an empty generator list.
    #[error("cannot close an empty generator list")]
    EmptyGenerators,
}

impl From<crate::linear::LinearError> for GroupError {
    fn from(e: crate::linear::LinearError) -> Self {
        GroupError::Payload(e.to_string())
    }
}
