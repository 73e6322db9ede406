//! Randomized law checks: algebraic identities that must hold for every
//! input, not just the frozen values pinned in unit tests.

use std::sync::{Arc, OnceLock};

use num_rational::Rational64;
use proptest::prelude::*;

use cptg_core::atlas::Atlas;
use cptg_core::group::is_isomorphic;
use cptg_core::group::{close, fingerprint, Catalog, Element, FiniteGroup};
use cptg_core::linear::{minus_i_sigma, Mat2G, Mat4Z, MatrixPart, Rat4, SemidirectElem};
use cptg_core::QuatUnit;

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::standard)
}

fn shared_atlas() -> &'static Atlas {
    static ATLAS: OnceLock<Atlas> = OnceLock::new();
    ATLAS.get_or_init(|| Atlas::build().expect("the atlas builds at the default cap"))
}

/// Q × Z2, built once; the workhorse for subgroup sampling.
fn dirac_like() -> &'static Arc<FiniteGroup> {
    static GROUP: OnceLock<Arc<FiniteGroup>> = OnceLock::new();
    GROUP.get_or_init(|| {
        let q = Arc::new(
            close(
                "Q",
                vec![QuatUnit::IOTA, QuatUnit::GAMMA],
                |a, b| Ok(*a * *b),
                |u| u.to_string(),
                64,
            )
            .unwrap(),
        );
        let z2 =
            Arc::new(close("Z2", vec![-1i64], |a, b| Ok(*a * *b), |v| v.to_string(), 8).unwrap());
        q.direct_product(&z2, "Q x Z2", 64).unwrap()
    })
}

fn catalog_entry(i: usize) -> &'static Arc<FiniteGroup> {
    let c = catalog();
    let names = c.names();
    c.group(names[i % names.len()]).unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Relabel a group along a permutation of its element ids.
fn relabel(g: &Arc<FiniteGroup>, perm: &[usize]) -> Arc<FiniteGroup> {
    let n = g.order();
    let mut carrier = vec![Element::Int(0); n];
    let mut labels = vec![String::new(); n];
    let mut table = vec![0usize; n * n];
    let mut inverses = vec![0usize; n];
    for x in 0..n {
        carrier[perm[x]] = g.payload(x).clone();
        labels[perm[x]] = g.label(x).to_string();
        inverses[perm[x]] = perm[g.inverse(x)];
    }
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
        }
    }
    let generators = g.generators().iter().map(|&x| perm[x]).collect();
    Arc::new(FiniteGroup::from_parts_unchecked(
        &format!("{} (relabeled)", g.name()),
        carrier,
        labels,
        table,
        perm[g.identity()],
        inverses,
        generators,
    ))
}

fn rational() -> impl Strategy<Value = Rational64> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational64::new(n, d))
}

fn translation() -> impl Strategy<Value = Rat4> {
    [rational(), rational(), rational(), rational()].prop_map(Rat4)
}

fn spin_matrix() -> impl Strategy<Value = Mat2G> {
    (0usize..4, any::<bool>()).prop_map(|(k, negate)| {
        let m = if k == 0 {
            Mat2G::identity()
        } else {
            minus_i_sigma(k)
        };
        if negate {
            -m
        } else {
            m
        }
    })
}

fn lorentz_matrix() -> impl Strategy<Value = Mat4Z> {
    [any::<bool>(); 4].prop_map(|signs| {
        let s = |b: bool| if b { -1 } else { 1 };
        Mat4Z::diag(s(signs[0]), s(signs[1]), s(signs[2]), s(signs[3]))
    })
}

fn spin_elem() -> impl Strategy<Value = SemidirectElem> {
    (translation(), spin_matrix()).prop_map(|(t, m)| SemidirectElem::new(t, MatrixPart::Spin(m)))
}

fn lorentz_elem() -> impl Strategy<Value = SemidirectElem> {
    (translation(), lorentz_matrix())
        .prop_map(|(t, m)| SemidirectElem::new(t, MatrixPart::Lorentz(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spin_composition_is_associative(
        x in spin_elem(),
        y in spin_elem(),
        z in spin_elem(),
    ) {
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lorentz_composition_is_associative(
        x in lorentz_elem(),
        y in lorentz_elem(),
        z in lorentz_elem(),
    ) {
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn spin_inverses_cancel_on_both_sides(x in spin_elem()) {
        let inv = x.inverse().unwrap();
        prop_assert_eq!(x.compose(&inv).unwrap(), SemidirectElem::identity_spin());
        prop_assert_eq!(inv.compose(&x).unwrap(), SemidirectElem::identity_spin());
    }

    #[test]
    fn lorentz_inverses_cancel_on_both_sides(x in lorentz_elem()) {
        let inv = x.inverse().unwrap();
        prop_assert_eq!(x.compose(&inv).unwrap(), SemidirectElem::identity_lorentz());
        prop_assert_eq!(inv.compose(&x).unwrap(), SemidirectElem::identity_lorentz());
    }

    #[test]
    fn identity_elements_are_neutral(x in spin_elem(), y in lorentz_elem()) {
        let e_spin = SemidirectElem::identity_spin();
        prop_assert_eq!(e_spin.compose(&x).unwrap(), x);
        prop_assert_eq!(x.compose(&e_spin).unwrap(), x);
        let e_lor = SemidirectElem::identity_lorentz();
        prop_assert_eq!(e_lor.compose(&y).unwrap(), y);
        prop_assert_eq!(y.compose(&e_lor).unwrap(), y);
    }

    #[test]
    fn mixed_matrix_kinds_refuse_to_compose(x in spin_elem(), y in lorentz_elem()) {
        prop_assert!(x.compose(&y).is_err());
        prop_assert!(y.compose(&x).is_err());
    }

    #[test]
    fn subgroup_orders_divide_the_group_order(
        seed in prop::collection::vec(0usize..16, 0..5),
    ) {
        let g = dirac_like();
        let (sub, inclusion) = g.subgroup("seeded", &seed).unwrap();
        prop_assert_eq!(g.order() % sub.order(), 0);
        prop_assert!(inclusion.verify().is_ok());
        prop_assert!(inclusion.is_injective());
    }

    #[test]
    fn product_fingerprints_multiply(i in 0usize..9, j in 0usize..9) {
        let a = catalog_entry(i);
        let b = catalog_entry(j);
        let prod = a.direct_product(b, "a x b", 1024).unwrap();
        let fa = fingerprint(a);
        let fb = fingerprint(b);
        let fp = fingerprint(&prod);
        prop_assert_eq!(fp.order, fa.order * fb.order);
        prop_assert_eq!(fp.is_abelian, fa.is_abelian && fb.is_abelian);
        prop_assert_eq!(fp.exponent, fa.exponent * fb.exponent / gcd(fa.exponent, fb.exponent));
        prop_assert_eq!(fp.center_order, fa.center_order * fb.center_order);
        prop_assert_eq!(fp.derived_order, fa.derived_order * fb.derived_order);
    }

    #[test]
    fn isomorphism_testing_is_reflexive(i in 0usize..14) {
        let g = catalog_entry(i);
        prop_assert!(is_isomorphic(g, g).is_some());
    }

    #[test]
    fn isomorphism_testing_is_symmetric(i in 0usize..9, j in 0usize..9) {
        let a = catalog_entry(i);
        let b = catalog_entry(j);
        prop_assert_eq!(
            is_isomorphic(a, b).is_some(),
            is_isomorphic(b, a).is_some()
        );
    }

    #[test]
    fn fingerprints_ignore_relabeling(
        (i, perm) in (0usize..13).prop_flat_map(|i| {
            let n = catalog_entry(i).order();
            (Just(i), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        }),
    ) {
        let g = catalog_entry(i);
        let permuted = relabel(g, &perm);
        prop_assert!(permuted.validate().is_ok());
        prop_assert_eq!(fingerprint(&permuted), fingerprint(g));
    }

    #[test]
    fn closure_is_deterministic(picks in prop::collection::vec(0usize..8, 1..5)) {
        let units: Vec<QuatUnit> = picks.iter().map(|&i| QuatUnit::all()[i]).collect();
        let build = || {
            close("G", units.clone(), |a, b| Ok(*a * *b), |u| u.to_string(), 64).unwrap()
        };
        prop_assert_eq!(build().cayley_table(), build().cayley_table());
    }

    #[test]
    fn center_quotients_partition_the_group(i in 0usize..13) {
        let g = catalog_entry(i);
        let (center, _) = g.center();
        let (quotient, projection) = g.quotient(&g.central_ids(), "G/Z").unwrap();
        prop_assert_eq!(center.order() * quotient.order(), g.order());
        prop_assert_eq!(projection.fiber_degree().unwrap(), center.order());
    }

    #[test]
    fn registered_maps_respect_products_pointwise(
        which in 0usize..32,
        a in 0usize..256,
        b in 0usize..256,
    ) {
        let atlas = shared_atlas();
        let names = atlas.map_names();
        let m = atlas.map(names[which % names.len()]).unwrap();
        let n = m.domain().order();
        let (x, y) = (a % n, b % n);
        prop_assert_eq!(
            m.apply(m.domain().mul(x, y)),
            m.codomain().mul(m.apply(x), m.apply(y))
        );
    }
}
