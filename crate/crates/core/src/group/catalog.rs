//! A small catalog of reference groups for naming what the engine builds.
//!
//! Covers the orders that actually occur here (1, 2, 4, 8, 16, 128), not a
//! general classification. [`Catalog::identify`] matches by fingerprint and
//! then confirms with an explicit isomorphism against the stored table, so
//! a returned name is backed by a witness map, never by invariants alone.

use std::sync::Arc;

use super::element::ZMod;
use super::finite::{close, FiniteGroup, DEFAULT_ORDER_CAP};
use super::iso::{fingerprint, is_isomorphic, Fingerprint};
use super::GroupError;
use crate::linear::{GaussInt, Mat2G};
use crate::quat::QuatUnit;

/// Named reference groups with precomputed fingerprints.
#[derive(Debug)]
pub struct Catalog {
    entries: Vec<(String, Arc<FiniteGroup>, Fingerprint)>,
}

fn cyclic(name: &str, n: u64) -> Arc<FiniteGroup> {
    Arc::new(
        close(
            name,
            vec![ZMod::new(1, n)],
            |a, b| Ok(a.add(b)),
            |z| z.to_string(),
            DEFAULT_ORDER_CAP,
        )
        .expect("cyclic reference groups always close"),
    )
}

fn product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>, name: &str) -> Arc<FiniteGroup> {
    a.direct_product(b, name, DEFAULT_ORDER_CAP)
        .expect("reference products stay under the cap")
}

impl Catalog {
    /// Build the standard entries.
    pub fn standard() -> Catalog {
        let trivial = Arc::new(
            close(
                "Trivial",
                vec![1i64],
                |a, b| Ok(a * b),
                |v| v.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .expect("the trivial group closes"),
        );
        let z2 = Arc::new(
            close(
                "Z2",
                vec![-1i64],
                |a, b| Ok(a * b),
                |v| v.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .expect("the order-two group closes"),
        );
        let c4 = cyclic("C4", 4);
        let c8 = cyclic("C8", 8);
        let klein = product(&z2, &z2, "Klein D2");
        let z2_cubed = product(&klein, &z2, "Z2^3");
        let c4_x_c2 = product(&c4, &z2, "C4 x C2");
        let q8 = Arc::new(
            close(
                "Q8",
                vec![QuatUnit::IOTA, QuatUnit::GAMMA],
                |a, b| Ok(*a * *b),
                |q| q.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .expect("the quaternion units close"),
        );
        let rot = Mat2G::new([
            [GaussInt::ZERO, GaussInt::MINUS_ONE],
            [GaussInt::ONE, GaussInt::ZERO],
        ]);
        let refl = Mat2G::new([
            [GaussInt::ONE, GaussInt::ZERO],
            [GaussInt::ZERO, GaussInt::MINUS_ONE],
        ]);
        let d4 = Arc::new(
            close(
                "D4",
                vec![rot, refl],
                |a, b| Ok(a.mul(b)),
                |m| m.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .expect("the square symmetries close"),
        );
        let q8_x_z2 = product(&q8, &z2, "Q8 x Z2");
        let d4_x_z2 = product(&d4, &z2, "D4 x Z2");
        let z2_fourth = product(&z2_cubed, &z2, "Z2^4");
        let c4_x_c2_x_c2 = product(&c4_x_c2, &z2, "C4 x C2 x C2");
        let order_128 = product(&q8_x_z2, &z2_cubed, "(Q8 x Z2) x Z2^3");

        let groups = vec![
            trivial,
            z2,
            c4,
            klein,
            c8,
            z2_cubed,
            c4_x_c2,
            q8,
            d4,
            q8_x_z2,
            d4_x_z2,
            z2_fourth,
            c4_x_c2_x_c2,
            order_128,
        ];
        let entries = groups
            .into_iter()
            .map(|g| {
                let fp = fingerprint(&g);
                (g.name().to_string(), g, fp)
            })
            .collect();
        Catalog { entries }
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _, _)| n.as_str()).collect()
    }

    pub fn group(&self, name: &str) -> Option<&Arc<FiniteGroup>> {
        self.entries
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, g, _)| g)
    }

    /// Name a group: fingerprint match, confirmed by an explicit
    /// isomorphism against the stored table.
    pub fn identify(&self, g: &Arc<FiniteGroup>) -> Result<&str, GroupError> {
        let fp = fingerprint(g);
        for (name, stored, stored_fp) in &self.entries {
            if *stored_fp == fp && is_isomorphic(g, stored).is_some() {
                return Ok(name);
            }
        }
        Err(GroupError::NotInCatalog(format!(
            "no entry of order {} matches {:?}",
            fp.order, fp.order_multiset
        )))
    }
}
