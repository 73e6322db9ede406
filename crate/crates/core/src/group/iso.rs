//! Isomorphism invariants and isomorphism search.
//!
//! [`fingerprint`] collects cheap isomorphism invariants used to refute
//! quickly; [`is_isomorphic`] then searches for an explicit isomorphism by
//! assigning images to a small generating set and extending each partial
//! assignment breadth first, pruning on element order, centrality, and
//! injectivity. A returned map is a fully verified bijective homomorphism,
//! so a `Some` answer is self-certifying.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::element::ElementId;
use super::finite::FiniteGroup;
use super::map::GroupMap;

/// Cheap isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub is_abelian: bool,
    /// How many elements have each multiplicative order.
    pub order_multiset: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub exponent: usize,
    pub derived_order: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Compute the invariants of a group.
pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut order_multiset: BTreeMap<usize, usize> = BTreeMap::new();
    let mut exponent = 1usize;
    for id in g.element_ids() {
        let k = g.element_order(id);
        *order_multiset.entry(k).or_insert(0) += 1;
        exponent = exponent / gcd(exponent, k) * k;
    }
    // Derived subgroup: closure of all commutators a⁻¹b⁻¹ab.
    let mut commutators = Vec::new();
    for a in g.element_ids() {
        for b in g.element_ids() {
            let c = g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
            if !commutators.contains(&c) {
                commutators.push(c);
            }
        }
    }
    Fingerprint {
        order: g.order(),
        is_abelian: g.is_abelian(),
        order_multiset,
        center_order: g.central_ids().len(),
        exponent,
        derived_order: g.closure_of(&commutators).len(),
    }
}

/// A small generating set, chosen greedily: each step adds the element
/// that grows the generated subgroup the most (least id breaks ties).
pub fn greedy_generators(g: &FiniteGroup) -> Vec<ElementId> {
    let n = g.order();
    let mut gens: Vec<ElementId> = Vec::new();
    let mut reach = g.closure_of(&gens).len();
    while reach < n {
        let mut best: Option<(usize, ElementId)> = None;
        for x in g.element_ids() {
            let mut trial = gens.clone();
            trial.push(x);
            let grown = g.closure_of(&trial).len();
            if grown > reach && best.is_none_or(|(b, _)| grown > b) {
                best = Some((grown, x));
            }
        }
        let (grown, x) = best.expect("some element must enlarge a proper subgroup");
        gens.push(x);
        reach = grown;
    }
    if gens.is_empty() {
        gens.push(g.identity());
    }
    gens
}

/// Extend generator image pairs over products, breadth first. Returns the
/// partial image table, or `None` on any homomorphism or injectivity
/// conflict.
fn extend_partial(
    a: &FiniteGroup,
    b: &FiniteGroup,
    pairs: &[(ElementId, ElementId)],
) -> Option<Vec<Option<ElementId>>> {
    let mut images: Vec<Option<ElementId>> = vec![None; a.order()];
    let mut used = vec![false; b.order()];
    images[a.identity()] = Some(b.identity());
    used[b.identity()] = true;
    let mut queue = vec![a.identity()];
    for &(x, y) in pairs {
        match images[x] {
            None => {
                if used[y] {
                    return None;
                }
                images[x] = Some(y);
                used[y] = true;
                queue.push(x);
            }
            Some(prev) if prev == y => {}
            Some(_) => return None,
        }
    }
    let mut next = 0;
    while next < queue.len() {
        let x = queue[next];
        for &(s, t) in pairs {
            let xs = a.mul(x, s);
            let forced = b.mul(images[x].unwrap(), t);
            match images[xs] {
                None => {
                    if used[forced] {
                        return None;
                    }
                    images[xs] = Some(forced);
                    used[forced] = true;
                    queue.push(xs);
                }
                Some(prev) if prev == forced => {}
                Some(_) => return None,
            }
        }
        next += 1;
    }
    Some(images)
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    chosen: &mut Vec<(ElementId, ElementId)>,
) -> Option<Vec<ElementId>> {
    let partial = extend_partial(a, b, chosen)?;
    if chosen.len() == gens.len() {
        // The generators generate, so the extension is total.
        debug_assert!(partial.iter().all(Option::is_some));
        return Some(partial.into_iter().map(Option::unwrap).collect());
    }
    let depth = chosen.len();
    for &y in &candidates[depth] {
        if chosen.iter().any(|&(_, t)| t == y) {
            continue;
        }
        chosen.push((gens[depth], y));
        if let Some(found) = search(a, b, gens, candidates, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Search for an isomorphism; `Some` carries an explicit verified map.
pub fn is_isomorphic(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Option<GroupMap> {
    if fingerprint(a) != fingerprint(b) {
        return None;
    }
    let gens = greedy_generators(a);
    let a_central = a.central_ids();
    let b_central = b.central_ids();
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&g| {
            let order = a.element_order(g);
            let central = a_central.contains(&g);
            b.element_ids()
                .filter(|&y| b.element_order(y) == order && b_central.contains(&y) == central)
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    let images = search(a, b, &gens, &candidates, &mut chosen)?;
    Some(
        GroupMap::new(&format!("{} ≅ {}", a.name(), b.name()), a, b, images)
            .expect("search output always satisfies the homomorphism law"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::element::ZMod;
    use crate::group::finite::{close, DEFAULT_ORDER_CAP};
    use crate::linear::{minus_i_sigma, Mat2G};
    use crate::quat::QuatUnit;

    fn quat_group() -> Arc<FiniteGroup> {
        Arc::new(
            close(
                "Q",
                vec![QuatUnit::IOTA, QuatUnit::GAMMA],
                |a, b| Ok(*a * *b),
                |q| q.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        )
    }

    fn pauli_unit_group() -> Arc<FiniteGroup> {
        Arc::new(
            close(
                "H",
                vec![minus_i_sigma(1), minus_i_sigma(2)],
                |a: &Mat2G, b: &Mat2G| Ok(a.mul(b)),
                |m| m.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        )
    }

    fn cyclic(n: u64) -> Arc<FiniteGroup> {
        Arc::new(
            close(
                &format!("C{n}"),
                vec![ZMod::new(1, n)],
                |a, b| Ok(a.add(b)),
                |z| z.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        )
    }

    fn klein() -> Arc<FiniteGroup> {
        let z2 = Arc::new(
            close(
                "Z2",
                vec![-1i64],
                |a, b| Ok(a * b),
                |v| v.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        );
        z2.direct_product(&z2, "Z2xZ2", DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn quaternion_fingerprint_is_frozen() {
        let fp = fingerprint(&quat_group());
        assert_eq!(fp.order, 8);
        assert!(!fp.is_abelian);
        assert_eq!(fp.order_multiset, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(fp.center_order, 2);
        assert_eq!(fp.exponent, 4);
        assert_eq!(fp.derived_order, 2);
    }

    #[test]
    fn fingerprint_separates_the_two_groups_of_order_four() {
        let c4 = fingerprint(&cyclic(4));
        let v = fingerprint(&klein());
        assert_eq!(c4.order, v.order);
        assert!(c4.is_abelian && v.is_abelian);
        assert_ne!(c4.order_multiset, v.order_multiset);
        assert_ne!(c4.exponent, v.exponent);
    }

    #[test]
    fn quaternion_units_and_pauli_units_are_isomorphic() {
        let q = quat_group();
        let h = pauli_unit_group();
        let iso = is_isomorphic(&q, &h).expect("these groups are isomorphic");
        assert!(iso.is_bijective());
        iso.verify().unwrap();
        // An isomorphism preserves element orders.
        for x in q.element_ids() {
            assert_eq!(q.element_order(x), h.element_order(iso.apply(x)));
        }
    }

    #[test]
    fn isomorphism_search_is_symmetric_and_reflexive() {
        let q = quat_group();
        let h = pauli_unit_group();
        assert!(is_isomorphic(&q, &q).is_some());
        assert!(is_isomorphic(&q, &h).is_some());
        assert!(is_isomorphic(&h, &q).is_some());
    }

    #[test]
    fn cyclic_and_klein_groups_of_order_four_are_not_isomorphic() {
        let c4 = cyclic(4);
        let v = klein();
        assert!(is_isomorphic(&c4, &v).is_none());
        assert!(is_isomorphic(&v, &c4).is_none());
    }

    #[test]
    fn dihedral_and_quaternion_groups_are_not_isomorphic() {
        use crate::linear::GaussInt;
        let r = Mat2G::new([
            [GaussInt::ZERO, GaussInt::MINUS_ONE],
            [GaussInt::ONE, GaussInt::ZERO],
        ]);
        let s = Mat2G::new([
            [GaussInt::ONE, GaussInt::ZERO],
            [GaussInt::ZERO, GaussInt::MINUS_ONE],
        ]);
        let d4 = Arc::new(
            close(
                "D4",
                vec![r, s],
                |a, b| Ok(a.mul(b)),
                |m| m.to_string(),
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        );
        let q = quat_group();
        assert_eq!(d4.order(), q.order());
        // Different counts of order-2 elements refute without search.
        assert_ne!(
            fingerprint(&d4).order_multiset,
            fingerprint(&q).order_multiset
        );
        assert!(is_isomorphic(&d4, &q).is_none());
    }

    #[test]
    fn the_central_quotient_of_the_quaternion_group_is_klein() {
        let q = quat_group();
        let center_ids = q.central_ids();
        let (quot, _) = q.quotient(&center_ids, "Q/±1").unwrap();
        assert!(is_isomorphic(&quot, &klein()).is_some());
    }

    #[test]
    fn greedy_generators_generate() {
        for g in [quat_group(), pauli_unit_group(), cyclic(8), klein()] {
            let gens = greedy_generators(&g);
            assert_eq!(g.closure_of(&gens).len(), g.order(), "in {}", g.name());
            assert!(gens.len() <= 4);
        }
        // A cyclic group needs exactly one generator.
        assert_eq!(greedy_generators(&cyclic(8)).len(), 1);
        assert_eq!(greedy_generators(&quat_group()).len(), 2);
    }

    #[test]
    fn fingerprints_of_direct_products_multiply_orders() {
        let q = quat_group();
        let v = klein();
        let prod = q.direct_product(&v, "QxV", DEFAULT_ORDER_CAP).unwrap();
        let fp = fingerprint(&prod);
        assert_eq!(fp.order, 32);
        assert!(!fp.is_abelian);
        assert_eq!(fp.center_order, 2 * 4);
    }
}
