//! Exact finite-group engine with concrete matrix realizations.
//!
//! Everything here is integer or rational arithmetic: groups are explicit
//! multiplication tables built by closing generator sets, homomorphisms
//! store full image tables and are verified on construction, and the
//! covering maps between the matrix realizations are computed by exact
//! trace formulas. On top of the engine sit an atlas of named groups and
//! maps, a commutative-diagram checker, and a check suite that turns every
//! structural claim into a pass/fail line.

pub mod atlas;
pub mod diagram;
pub mod group;
pub mod linear;
pub mod quat;
pub mod verify;

pub use atlas::{Atlas, AtlasError, Reconstruction};
pub use diagram::{builtin_diagrams, Diagram, DiagramError, DiagramReport};
pub use group::{
    close, fingerprint, greedy_generators, is_isomorphic, Catalog, CayleyTable, Element, ElementId,
    Fingerprint, FiniteGroup, GroupError, GroupMap, ZMod, DEFAULT_ORDER_CAP,
};
pub use linear::{
    block_embed, minus_i_sigma, pauli, phi, phi_double, phi_tilde, GaussInt, LinearError, Mat2G,
    Mat3Z, Mat4Z, MatrixPart, Rat4, SemidirectElem,
};
pub use quat::{QuatAxis, QuatUnit};
pub use verify::{
    all_checks, run_checks, Check, CheckOutcome, CheckStatus, Summary, VerificationReport,
    VerifyError,
};
