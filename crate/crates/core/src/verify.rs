//! The check suite: every structural claim as a named pass/fail line.
//!
//! Checks are deliberately redundant with construction-time verification.
//! The atlas refuses to build maps that are not homomorphisms, yet the
//! suite re-verifies each one, recomputes covering images by direct
//! matrix arithmetic rather than through stored tables, and confirms each
//! quotient-by-kernel against the image (the classic isomorphism
//! cross-check). Agreement between independent routes is the point;
//! checks that merely repeated the constructor would prove nothing.
//!
//! Check ids are stable dotted strings (`engine.group.Q`,
//! `map.lambda.hom`, `diagram.ladder.cells`, ...). [`run_checks`]
//! evaluates all of them, or one selected id, against a given atlas —
//! including deliberately corrupted atlases used by tests.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::atlas::Atlas;
use crate::diagram::builtin_diagrams;
use crate::group::{fingerprint, is_isomorphic, Element, FiniteGroup, GroupMap};
use crate::linear::{
    block_embed, phi, phi_double, phi_tilde, Mat2G, Mat3Z, Mat4Z, MatrixPart, SemidirectElem,
};
use crate::quat::QuatUnit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One evaluated check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: String,
    pub claim: String,
    pub status: CheckStatus,
    /// Empty on pass; the first failure witness otherwise.
    pub witness: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// The complete result of a verification run; serializes to the stable
/// JSON schema consumed by CI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub checks: Vec<CheckOutcome>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Process exit code mirroring the pass/fail state.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check id {0:?}")]
    UnknownCheckId(String),
}

type CheckFn = Box<dyn Fn(&Atlas) -> Result<(), String>>;

/// A named check: a claim and a way to test it against an atlas.
pub struct Check {
    pub id: String,
    pub claim: String,
    run: CheckFn,
}

fn check<F>(id: &str, claim: &str, run: F) -> Check
where
    F: Fn(&Atlas) -> Result<(), String> + 'static,
{
    Check {
        id: id.to_string(),
        claim: claim.to_string(),
        run: Box::new(run),
    }
}

fn ensure(cond: bool, witness: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness.into())
    }
}

fn group<'a>(a: &'a Atlas, name: &str) -> Result<&'a Arc<FiniteGroup>, String> {
    a.group(name).map_err(|e| e.to_string())
}

fn map<'a>(a: &'a Atlas, name: &str) -> Result<&'a Arc<GroupMap>, String> {
    a.map(name).map_err(|e| e.to_string())
}

fn identify_as(a: &Atlas, name: &str, expected: &str) -> Result<(), String> {
    let g = group(a, name)?;
    let found = a.catalog().identify(g).map_err(|e| e.to_string())?;
    ensure(
        found == expected,
        format!("{name} identifies as {found}, expected {expected}"),
    )
}

fn mat2_of(e: &Element) -> Result<Mat2G, String> {
    match e {
        Element::Mat2(m) => Ok(*m),
        other => Err(format!("expected a spin matrix, found {other}")),
    }
}

fn mat3_of(e: &Element) -> Result<Mat3Z, String> {
    match e {
        Element::Mat3(m) => Ok(*m),
        other => Err(format!("expected a rotation matrix, found {other}")),
    }
}

fn pair_of(e: &Element) -> Result<(&Element, &Element), String> {
    match e {
        Element::Pair(x, y) => Ok((x, y)),
        other => Err(format!("expected a pair, found {other}")),
    }
}

fn find(g: &Arc<FiniteGroup>, payload: &Element) -> Result<usize, String> {
    g.find_payload(payload)
        .ok_or_else(|| format!("{} does not contain {payload}", g.name()))
}

/// The spin matrices of the quaternion units, via the lambda table.
fn quat_matrix(a: &Atlas, u: QuatUnit) -> Result<Mat2G, String> {
    let q = group(a, "Q")?;
    let h = group(a, "H")?;
    let lambda = map(a, "lambda")?;
    let x = find(q, &u.into())?;
    mat2_of(h.payload(lambda.apply(x)))
}

/// Every non-identity element squares to the identity.
fn is_klein_shaped(g: &FiniteGroup) -> bool {
    g.order() == 4 && g.element_ids().all(|x| g.mul(x, x) == g.identity())
}

fn first_isomorphism_holds(m: &GroupMap) -> Result<(), String> {
    let (quot, _) = m
        .domain()
        .quotient(&m.kernel_ids(), &format!("{}/ker", m.domain().name()))
        .map_err(|e| e.to_string())?;
    let (image, _) = m
        .image_subgroup(&format!("im({})", m.name()))
        .map_err(|e| e.to_string())?;
    ensure(
        is_isomorphic(&quot, &image).is_some(),
        format!(
            "quotient by the kernel (order {}) is not isomorphic to the image (order {})",
            quot.order(),
            image.order()
        ),
    )
}

/// Build the full check list for an atlas. The list adapts to the
/// registered names so fixture atlases with replaced groups are checked
/// as-is.
pub fn all_checks(atlas: &Atlas) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();

    for name in atlas.group_names() {
        let name = name.to_string();
        let id = format!("engine.group.{name}");
        let claim = format!("{name}: Latin square, associativity, identity, inverses, generators");
        checks.push(check(&id, &claim, move |a| {
            group(a, &name)?.validate().map_err(|e| e.to_string())
        }));
    }

    for name in atlas.map_names() {
        let owned = name.to_string();
        let id = format!("map.{owned}.hom");
        let claim = format!("{owned} satisfies the homomorphism law on all pairs");
        checks.push(check(&id, &claim, move |a| {
            let m = map(a, &owned)?;
            m.verify().map_err(|e| e.to_string())?;
            let degree = m.fiber_degree().map_err(|e| e.to_string())?;
            let image = m.image_ids().len();
            ensure(
                degree * image == m.domain().order(),
                format!(
                    "fiber degree {degree} × image size {image} ≠ domain order {}",
                    m.domain().order()
                ),
            )
        }));

        let owned = name.to_string();
        let id = format!("map.{owned}.first_iso");
        let claim = format!("{owned}: domain/kernel is isomorphic to the image");
        checks.push(check(&id, &claim, move |a| {
            first_isomorphism_holds(map(a, &owned)?)
        }));
    }

    checks.push(check(
        "gpsi.structure",
        "G_psi has order 16 and is non-abelian",
        |a| {
            let g = group(a, "G_psi")?;
            ensure(g.order() == 16, format!("order is {}", g.order()))?;
            ensure(!g.is_abelian(), "group is abelian")
        },
    ));

    checks.push(check(
        "gpsi.iso.q_x_z2",
        "G_psi is isomorphic to a freshly built Q × Z2",
        |a| {
            let q = group(a, "Q")?;
            let z2 = group(a, "Z2")?;
            let prod = q
                .direct_product(z2, "Q x Z2 (fresh)", a.cap())
                .map_err(|e| e.to_string())?;
            let witness = is_isomorphic(group(a, "G_psi")?, &prod).ok_or("no isomorphism found")?;
            witness.verify().map_err(|e| e.to_string())?;
            ensure(witness.is_bijective(), "witness is not bijective")
        },
    ));

    checks.push(check("q.identify", "Q identifies as Q8", |a| {
        identify_as(a, "Q", "Q8")
    }));
    checks.push(check("gpsi.identify", "G_psi identifies as Q8 x Z2", |a| {
        identify_as(a, "G_psi", "Q8 x Z2")
    }));

    checks.push(check(
        "ga.structure",
        "G_A has order 8, is abelian, and has exponent 2",
        |a| {
            let fp = fingerprint(group(a, "G_A")?);
            ensure(fp.order == 8, format!("order is {}", fp.order))?;
            ensure(fp.is_abelian, "not abelian")?;
            ensure(fp.exponent == 2, format!("exponent is {}", fp.exponent))
        },
    ));
    checks.push(check("ga.identify", "G_A identifies as Z2^3", |a| {
        identify_as(a, "G_A", "Z2^3")
    }));

    checks.push(check(
        "gqed.structure",
        "G_QED has order 128 and is non-abelian",
        |a| {
            let g = group(a, "G_QED")?;
            ensure(g.order() == 128, format!("order is {}", g.order()))?;
            ensure(!g.is_abelian(), "group is abelian")
        },
    ));
    checks.push(check(
        "gqed.identify",
        "G_QED identifies as (Q8 x Z2) x Z2^3",
        |a| identify_as(a, "G_QED", "(Q8 x Z2) x Z2^3"),
    ));
    checks.push(check(
        "gqed.center",
        "the center of G_QED has order 32, by enumeration",
        |a| {
            let g = group(a, "G_QED")?;
            let n = g.central_ids().len();
            ensure(n == 32, format!("center has order {n}"))
        },
    ));

    checks.push(check(
        "lambda.structure",
        "lambda is bijective and sends ι,γ,κ,−1 to −iσ1,−iσ2,−iσ3,−I",
        |a| {
            let lambda = map(a, "lambda")?;
            ensure(lambda.is_bijective(), "not bijective")?;
            use crate::linear::minus_i_sigma;
            for (u, m) in [
                (QuatUnit::IOTA, minus_i_sigma(1)),
                (QuatUnit::GAMMA, minus_i_sigma(2)),
                (QuatUnit::KAPPA, minus_i_sigma(3)),
                (QuatUnit::MINUS_ONE, -Mat2G::identity()),
            ] {
                let got = quat_matrix(a, u)?;
                ensure(got == m, format!("image of {u} is {got}, expected {m}"))?;
            }
            Ok(())
        },
    ));

    checks.push(check(
        "h.center",
        "the center of H is {I, −I} and identifies as Z2",
        |a| {
            let h = group(a, "H")?;
            let (center, _) = h.center();
            ensure(
                center.order() == 2,
                format!("center order {}", center.order()),
            )?;
            find(&center, &(-Mat2G::identity()).into())?;
            identify_center(a, &center)
        },
    ));

    checks.push(check(
        "covering.hom",
        "the covering respects products on all 64 spin pairs, by matrix arithmetic",
        |a| {
            let h = group(a, "H")?;
            for x in h.element_ids() {
                for y in h.element_ids() {
                    let ax = mat2_of(h.payload(x))?;
                    let ay = mat2_of(h.payload(y))?;
                    let lhs = phi(&ax.mul(&ay)).map_err(|e| e.to_string())?;
                    let rhs = phi(&ax)
                        .map_err(|e| e.to_string())?
                        .mul(&phi(&ay).map_err(|e| e.to_string())?);
                    ensure(
                        lhs == rhs,
                        format!("at {}·{}: {lhs} vs {rhs}", h.label(x), h.label(y)),
                    )?;
                }
            }
            Ok(())
        },
    ));

    checks.push(check(
        "covering.sign_blind",
        "the covering maps send A and −A to the same image, for all 8 spin elements",
        |a| {
            let h = group(a, "H")?;
            for x in h.element_ids() {
                let m = mat2_of(h.payload(x))?;
                let r1 = phi(&m).map_err(|e| e.to_string())?;
                let r2 = phi(&-m).map_err(|e| e.to_string())?;
                ensure(r1 == r2, format!("3×3 images differ at {}", h.label(x)))?;
                let l1 = phi_tilde(&m).map_err(|e| e.to_string())?;
                let l2 = phi_tilde(&-m).map_err(|e| e.to_string())?;
                ensure(l1 == l2, format!("4×4 images differ at {}", h.label(x)))?;
            }
            Ok(())
        },
    ));

    checks.push(check(
        "covering.fibers",
        "the restricted covering is 2-to-1 with kernel {I, −I} identified as Z2",
        |a| {
            let m = map(a, "phi_restricted")?;
            let degree = m.fiber_degree().map_err(|e| e.to_string())?;
            ensure(degree == 2, format!("fiber degree {degree}"))?;
            let (kernel, _) = m.kernel().map_err(|e| e.to_string())?;
            ensure(
                kernel.order() == 2,
                format!("kernel order {}", kernel.order()),
            )?;
            find(&kernel, &(-Mat2G::identity()).into())?;
            identify_center(a, &kernel)
        },
    ));

    checks.push(check(
        "covering.block",
        "the 4×4 covering equals the block embedding of the 3×3 covering on all of H",
        |a| {
            let h = group(a, "H")?;
            for x in h.element_ids() {
                let m = mat2_of(h.payload(x))?;
                let lhs = phi_tilde(&m).map_err(|e| e.to_string())?;
                let rhs = block_embed(&phi(&m).map_err(|e| e.to_string())?);
                ensure(lhs == rhs, format!("mismatch at {}", h.label(x)))?;
            }
            Ok(())
        },
    ));

    checks.push(check(
        "phiH.elements",
        "the rotation image is exactly the identity and the three axis half-turns",
        |a| {
            let phih = group(a, "PhiH")?;
            let expected: BTreeSet<Mat3Z> = [
                Mat3Z::identity(),
                Mat3Z::diag(1, -1, -1),
                Mat3Z::diag(-1, 1, -1),
                Mat3Z::diag(-1, -1, 1),
            ]
            .into_iter()
            .collect();
            let mut actual = BTreeSet::new();
            for x in phih.element_ids() {
                actual.insert(mat3_of(phih.payload(x))?);
            }
            ensure(
                actual == expected,
                format!(
                    "image has {} elements and differs from the half-turn set",
                    actual.len()
                ),
            )
        },
    ));

    checks.push(check(
        "phiH.klein",
        "the rotation image is a Klein group, structurally and by catalog",
        |a| {
            let phih = group(a, "PhiH")?;
            ensure(is_klein_shaped(phih), "not of Klein shape")?;
            identify_as(a, "PhiH", "Klein D2")
        },
    ));
    checks.push(check(
        "gpt.klein",
        "the parity/time-reversal group is a Klein group, structurally and by catalog",
        |a| {
            let g_pt = group(a, "G_PT")?;
            ensure(is_klein_shaped(g_pt), "not of Klein shape")?;
            identify_as(a, "G_PT", "Klein D2")
        },
    ));
    checks.push(check(
        "p_sub.z2",
        "⟨P⟩ has order 2 and identifies as Z2",
        |a| {
            let g = group(a, "P_sub")?;
            ensure(g.order() == 2, format!("order {}", g.order()))?;
            identify_as(a, "P_sub", "Z2")
        },
    ));
    checks.push(check(
        "t_sub.z2",
        "⟨T⟩ has order 2 and identifies as Z2",
        |a| {
            let g = group(a, "T_sub")?;
            ensure(g.order() == 2, format!("order {}", g.order()))?;
            identify_as(a, "T_sub", "Z2")
        },
    ));

    checks.push(check(
        "reconstruct.dirac.preimage",
        "the rotation preimage among unit multiples of the Pauli matrices has order 8 with −I",
        |a| {
            let rec = a.reconstruct_dirac_group().map_err(|e| e.to_string())?;
            // The reconstruction already enforces the preimage shape; pin
            // the visible consequence too.
            ensure(
                rec.group.order() == 16,
                format!("extended preimage has order {}", rec.group.order()),
            )
        },
    ));
    checks.push(check(
        "reconstruct.dirac.iso",
        "preimage × Z2 is isomorphic to G_psi, with a verified witness",
        |a| {
            let rec = a.reconstruct_dirac_group().map_err(|e| e.to_string())?;
            rec.witness.verify().map_err(|e| e.to_string())?;
            ensure(rec.witness.is_bijective(), "witness is not bijective")
        },
    ));
    checks.push(check(
        "reconstruct.photon.via_p",
        "G_PT × ⟨P⟩ identifies as Z2^3 and is isomorphic to G_A",
        |a| {
            a.reconstruct_photon_group_via_parity()
                .map(|_| ())
                .map_err(|e| e.to_string())
        },
    ));
    checks.push(check(
        "reconstruct.photon.via_t",
        "G_PT × ⟨T⟩ identifies as Z2^3 and is isomorphic to G_A",
        |a| {
            a.reconstruct_photon_group_via_time_reversal()
                .map(|_| ())
                .map_err(|e| e.to_string())
        },
    ));

    checks.push(check(
        "rho.fibers",
        "rho is 2-to-1 with kernel {1, −1}",
        |a| {
            let rho = map(a, "rho")?;
            let degree = rho.fiber_degree().map_err(|e| e.to_string())?;
            ensure(degree == 2, format!("fiber degree {degree}"))?;
            let kernel = rho.kernel_ids();
            let q = group(a, "Q")?;
            let expected: BTreeSet<usize> = [
                find(q, &QuatUnit::ONE.into())?,
                find(q, &QuatUnit::MINUS_ONE.into())?,
            ]
            .into_iter()
            .collect();
            ensure(
                kernel.iter().copied().collect::<BTreeSet<_>>() == expected,
                format!("kernel is {kernel:?}"),
            )
        },
    ));

    checks.push(check(
        "psi.fibers",
        "psi is 2-to-1 with kernel {(1,1), (−1,1)}",
        |a| {
            let psi = map(a, "psi")?;
            let degree = psi.fiber_degree().map_err(|e| e.to_string())?;
            ensure(degree == 2, format!("fiber degree {degree}"))?;
            let g_psi = group(a, "G_psi")?;
            let expected: BTreeSet<usize> = [
                find(g_psi, &Element::pair(QuatUnit::ONE.into(), Element::Int(1)))?,
                find(
                    g_psi,
                    &Element::pair(QuatUnit::MINUS_ONE.into(), Element::Int(1)),
                )?,
            ]
            .into_iter()
            .collect();
            let kernel = psi.kernel_ids();
            ensure(
                kernel.iter().copied().collect::<BTreeSet<_>>() == expected,
                format!("kernel is {kernel:?}"),
            )
        },
    ));

    checks.push(check(
        "mu_bar.pairing",
        "mu_bar is a bijective homomorphism with P ↦ the x half-turn",
        |a| {
            let mu_bar = map(a, "mu_bar")?;
            ensure(mu_bar.is_bijective(), "not bijective")?;
            let g_pt = group(a, "G_PT")?;
            let phih = group(a, "PhiH")?;
            let expectations = [
                (Mat4Z::parity(), Mat3Z::diag(1, -1, -1)),
                (Mat4Z::time_reversal(), Mat3Z::diag(-1, 1, -1)),
                (Mat4Z::diag(-1, -1, -1, -1), Mat3Z::diag(-1, -1, 1)),
            ];
            for (from, to) in expectations {
                let x = find(g_pt, &from.into())?;
                let got = mat3_of(phih.payload(mu_bar.apply(x)))?;
                ensure(got == to, format!("{from} maps to {got}, expected {to}"))?;
            }
            Ok(())
        },
    ));

    for name in [
        "alpha",
        "alpha_bar",
        "beta",
        "beta_bar",
        "gamma_map",
        "gamma_bar",
    ] {
        let owned = name.to_string();
        let id = format!("{name}.injective");
        let claim = format!("{name} is an injective embedding");
        checks.push(check(&id, &claim, move |a| {
            ensure(map(a, &owned)?.is_injective(), "images collide")
        }));
    }

    checks.push(check(
        "nu.two_to_one",
        "nu is 2-to-1 and collapses (q,−1) with (−q,1) for all 8 units",
        |a| {
            let nu = map(a, "nu")?;
            let degree = nu.fiber_degree().map_err(|e| e.to_string())?;
            ensure(degree == 2, format!("fiber degree {degree}"))?;
            let g_psi = group(a, "G_psi")?;
            for u in QuatUnit::all() {
                let x = find(g_psi, &Element::pair(u.into(), Element::Int(-1)))?;
                let y = find(g_psi, &Element::pair((-u).into(), Element::Int(1)))?;
                ensure(
                    nu.apply(x) == nu.apply(y),
                    format!("images differ for ({u},−1) and ({},1)", -u),
                )?;
            }
            Ok(())
        },
    ));

    checks.push(check(
        "nu.kernel",
        "the kernel of nu is the diagonal pair {(1,1), (−1,−1)}",
        |a| {
            let nu = map(a, "nu")?;
            let g_psi = group(a, "G_psi")?;
            let expected: BTreeSet<usize> = [
                find(g_psi, &Element::pair(QuatUnit::ONE.into(), Element::Int(1)))?,
                find(
                    g_psi,
                    &Element::pair(QuatUnit::MINUS_ONE.into(), Element::Int(-1)),
                )?,
            ]
            .into_iter()
            .collect();
            let kernel = nu.kernel_ids();
            ensure(
                kernel.iter().copied().collect::<BTreeSet<_>>() == expected,
                format!("kernel is {kernel:?}"),
            )
        },
    ));

    checks.push(check(
        "nu_bar.well_defined",
        "both points of every psi-fiber push to the same rotation, by matrix arithmetic",
        |a| {
            let g_psi = group(a, "G_psi")?;
            let g_a = group(a, "G_A")?;
            let phih = group(a, "PhiH")?;
            let psi = map(a, "psi")?;
            let nu_bar = map(a, "nu_bar")?;
            for class in g_a.element_ids() {
                let mut images: Vec<Mat3Z> = Vec::new();
                for y in g_psi.element_ids() {
                    if psi.apply(y) != class {
                        continue;
                    }
                    // Independent route: payload arithmetic, not map tables.
                    let (pq, pz) = pair_of(g_psi.payload(y))?;
                    let u = match pq {
                        Element::Quat(u) => *u,
                        other => return Err(format!("unexpected payload {other}")),
                    };
                    let mut m = quat_matrix(a, u)?;
                    if *pz == Element::Int(-1) {
                        m = -m;
                    }
                    images.push(phi(&m).map_err(|e| e.to_string())?);
                }
                ensure(
                    images.len() == 2,
                    format!("fiber of {} has {} points", g_a.label(class), images.len()),
                )?;
                ensure(
                    images[0] == images[1],
                    format!("fiber images disagree at {}", g_a.label(class)),
                )?;
                let stored = mat3_of(phih.payload(nu_bar.apply(class)))?;
                ensure(
                    stored == images[0],
                    format!("stored image differs at {}", g_a.label(class)),
                )?;
            }
            Ok(())
        },
    ));

    checks.push(check("nu_bar.two_to_one", "nu_bar is 2-to-1", |a| {
        let degree = map(a, "nu_bar")?
            .fiber_degree()
            .map_err(|e| e.to_string())?;
        ensure(degree == 2, format!("fiber degree {degree}"))
    }));

    checks.push(check(
        "diagram.ladder.cells",
        "all four ladder squares commute elementwise",
        |a| diagram_passes(a, "ladder"),
    ));

    checks.push(check(
        "diagram.ladder.fibers",
        "all five vertical ladder maps are 2-to-1",
        |a| {
            for name in [
                "psi",
                "rho",
                "phi_restricted",
                "phi_tilde_restricted",
                "phi_double_restricted",
            ] {
                let degree = map(a, name)?.fiber_degree().map_err(|e| e.to_string())?;
                ensure(degree == 2, format!("{name} has fiber degree {degree}"))?;
            }
            Ok(())
        },
    ));

    checks.push(check(
        "diagram.ladder.kernels",
        "all five vertical ladder maps have kernels identified as Z2",
        |a| {
            for name in [
                "psi",
                "rho",
                "phi_restricted",
                "phi_tilde_restricted",
                "phi_double_restricted",
            ] {
                let (kernel, _) = map(a, name)?.kernel().map_err(|e| e.to_string())?;
                ensure(
                    kernel.order() == 2,
                    format!("{name} kernel has order {}", kernel.order()),
                )?;
                identify_center(a, &kernel).map_err(|e| format!("{name}: {e}"))?;
            }
            Ok(())
        },
    ));

    checks.push(check(
        "diagram.nu_square.commutes",
        "the nu square commutes on all 16 elements",
        |a| diagram_passes(a, "nu_square"),
    ));

    checks.push(check(
        "diagram.varphi_square.commutes",
        "the varphi square commutes on all 16 elements",
        |a| diagram_passes(a, "varphi_square"),
    ));

    checks.push(check(
        "diagram.varphi_square.dual_route",
        "the varphi square agrees with direct semidirect arithmetic on every element",
        |a| {
            let g_psi = group(a, "G_psi")?;
            let g_a_maps = (
                map(a, "varphi")?,
                map(a, "phi_double_restricted")?,
                map(a, "psi")?,
                map(a, "varphi_bar")?,
            );
            let p4c = group(a, "P4c_sub")?;
            for x in g_psi.element_ids() {
                // Route one: map tables around the top of the square.
                let top = g_a_maps.1.apply(g_a_maps.0.apply(x));
                // Route two: map tables around the bottom.
                let bottom = g_a_maps.3.apply(g_a_maps.2.apply(x));
                // Route three: raw arithmetic from the payload.
                let (pq, pz) = pair_of(g_psi.payload(x))?;
                let u = match pq {
                    Element::Quat(u) => *u,
                    other => return Err(format!("unexpected payload {other}")),
                };
                let mut m = quat_matrix(a, u)?;
                if *pz == Element::Int(-1) {
                    m = -m;
                }
                let lifted = SemidirectElem::zero_translation(MatrixPart::Spin(m));
                let pushed = phi_double(&lifted).map_err(|e| e.to_string())?;
                let arithmetic = find(p4c, &pushed.into())?;
                ensure(
                    top == bottom && bottom == arithmetic,
                    format!(
                        "routes disagree at {}: {} / {} / {}",
                        g_psi.label(x),
                        p4c.label(top),
                        p4c.label(bottom),
                        p4c.label(arithmetic)
                    ),
                )?;
            }
            Ok(())
        },
    ));

    checks
}

/// Identify a 2-element group as Z2 via the catalog.
fn identify_center(a: &Atlas, g: &Arc<FiniteGroup>) -> Result<(), String> {
    let found = a.catalog().identify(g).map_err(|e| e.to_string())?;
    ensure(found == "Z2", format!("identifies as {found}, expected Z2"))
}

fn diagram_passes(a: &Atlas, name: &str) -> Result<(), String> {
    let diagrams = builtin_diagrams(a).map_err(|e| e.to_string())?;
    let d = diagrams
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| format!("no diagram named {name}"))?;
    let report = d.check().map_err(|e| e.to_string())?;
    for line in &report.lines {
        if !line.passed {
            return Err(format!("{}: {}", line.subject, line.witness));
        }
    }
    Ok(())
}

/// Run all checks, or a single check selected by id.
pub fn run_checks(atlas: &Atlas, only: Option<&str>) -> Result<VerificationReport, VerifyError> {
    let checks = all_checks(atlas);
    let selected: Vec<&Check> = match only {
        None => checks.iter().collect(),
        Some(id) => {
            let hits: Vec<&Check> = checks.iter().filter(|c| c.id == id).collect();
            if hits.is_empty() {
                return Err(VerifyError::UnknownCheckId(id.to_string()));
            }
            hits
        }
    };
    let mut outcomes = Vec::with_capacity(selected.len());
    let mut passed = 0;
    for c in selected {
        // A check that panics (corrupted fixture tables can trip interior
        // asserts) is recorded as a failure, never a crashed run.
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (c.run)(atlas)))
            .unwrap_or_else(|payload| {
                let msg = payload
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| payload.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "opaque panic payload".to_string());
                Err(format!("check panicked: {msg}"))
            });
        let outcome = match result {
            Ok(()) => {
                passed += 1;
                CheckOutcome {
                    id: c.id.clone(),
                    claim: c.claim.clone(),
                    status: CheckStatus::Pass,
                    witness: String::new(),
                }
            }
            Err(witness) => CheckOutcome {
                id: c.id.clone(),
                claim: c.claim.clone(),
                status: CheckStatus::Fail,
                witness,
            },
        };
        outcomes.push(outcome);
    }
    let total = outcomes.len();
    Ok(VerificationReport {
        version: "1".to_string(),
        checks: outcomes,
        summary: Summary {
            total,
            passed,
            failed: total - passed,
        },
    })
}
