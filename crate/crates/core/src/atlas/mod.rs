//! The atlas: every named group and homomorphism, built and cross-wired.
//!
//! Construction is a single pass. The quaternion units, the sign group,
//! and their products give the matter-side groups; the spin matrices, the
//! rotation images, and the parity/time-reversal matrices give the
//! geometry-side groups; quotients and pairings connect the two sides.
//! Every map is verified as a homomorphism the moment it is built, so a
//! finished atlas is already a considerable consistency proof; the
//! checker in [`crate::verify`] re-derives the interesting claims from
//! independent routes.
//!
//! Names registered here are stable public identifiers: groups `Q`,
//! `Z2`, `G_psi`, `Q_mod_center`, `G_A`, `G_QED`, `H`, `PhiH`, `G_PT`,
//! `P_sub`, `T_sub`, `SL2C_sub`, `SOc31_sub`, `Pbar4c_sub`, `P4c_sub`;
//! maps `lambda`, `rho`, `psi`, `mu_bar`, `alpha`, `alpha_bar`, `beta`,
//! `beta_bar`, `gamma_map`, `gamma_bar`, `nu`, `nu_bar`, `varphi`,
//! `varphi_bar`, `phi_restricted`, `phi_tilde_restricted`,
//! `phi_double_restricted`.

use std::sync::Arc;

use indexmap::IndexMap;

use crate::group::{
    close, is_isomorphic, Catalog, Element, ElementId, FiniteGroup, GroupError, GroupMap,
    DEFAULT_ORDER_CAP,
};
use crate::linear::{
    block_embed, minus_i_sigma, pauli, phi, phi_double, phi_tilde, GaussInt, LinearError, Mat2G,
    Mat3Z, Mat4Z, MatrixPart, SemidirectElem,
};
use crate::quat::{QuatAxis, QuatUnit};

/// Errors from atlas construction and reconstruction.
#[derive(Debug, thiserror::Error)]
pub enum AtlasError {
    #[error("while building {stage}: {source}")]
    Group {
        stage: String,
        #[source]
        source: GroupError,
    },

    #[error("while building {stage}: {source}")]
    Linear {
        stage: String,
        #[source]
        source: LinearError,
    },

    /// A fiber-induced map received disagreeing images over one fiber.
    #[error("map {map} is ill-defined at {element}: fiber images disagree")]
    IllDefined { map: String, element: String },

    #[error("reconstruction failed: {0}")]
    ReconstructionFailed(String),

    #[error("unknown group name {0:?}")]
    UnknownGroup(String),

    #[error("unknown map name {0:?}")]
    UnknownMap(String),

    /// A computed payload is missing from the group that should carry it.
    #[error("payload {payload} not found in group {group}")]
    MissingPayload { group: String, payload: String },
}

fn stage<T>(name: &str, r: Result<T, GroupError>) -> Result<T, AtlasError> {
    r.map_err(|source| AtlasError::Group {
        stage: name.to_string(),
        source,
    })
}

/// Label a spin matrix by its conventional name.
fn spin_label(m: &Mat2G) -> String {
    if *m == Mat2G::identity() {
        return "I".into();
    }
    if *m == -Mat2G::identity() {
        return "-I".into();
    }
    for k in 1..=3 {
        let s = minus_i_sigma(k);
        if *m == s {
            return format!("-iσ{k}");
        }
        if *m == -s {
            return format!("iσ{k}");
        }
    }
    m.to_string()
}

/// Label a rotation by the axis of its half turn.
fn rotation_label(r: &Mat3Z) -> String {
    if *r == Mat3Z::identity() {
        "I".into()
    } else if *r == Mat3Z::diag(1, -1, -1) {
        "Rx(π)".into()
    } else if *r == Mat3Z::diag(-1, 1, -1) {
        "Ry(π)".into()
    } else if *r == Mat3Z::diag(-1, -1, 1) {
        "Rz(π)".into()
    } else {
        r.to_string()
    }
}

/// Label a Lorentz matrix by its conventional name.
fn lorentz_label(m: &Mat4Z) -> String {
    if *m == Mat4Z::identity() {
        "E".into()
    } else if *m == Mat4Z::parity() {
        "P".into()
    } else if *m == Mat4Z::time_reversal() {
        "T".into()
    } else if *m == Mat4Z::diag(-1, -1, -1, -1) {
        "PT".into()
    } else if *m == Mat4Z::diag(1, 1, -1, -1) {
        "Rx(π)".into()
    } else if *m == Mat4Z::diag(1, -1, 1, -1) {
        "Ry(π)".into()
    } else if *m == Mat4Z::diag(1, -1, -1, 1) {
        "Rz(π)".into()
    } else {
        m.to_string()
    }
}

fn semi_label(x: &SemidirectElem) -> String {
    let part = match &x.part {
        MatrixPart::Spin(a) => spin_label(a),
        MatrixPart::Lorentz(m) => lorentz_label(m),
    };
    if x.translation.is_zero() {
        format!("(0,{part})")
    } else {
        format!("({},{part})", x.translation)
    }
}

fn expect_quat(e: &Element) -> QuatUnit {
    match e {
        Element::Quat(q) => *q,
        other => panic!("atlas invariant: expected a quaternion payload, got {other}"),
    }
}

fn expect_mat2(e: &Element) -> Mat2G {
    match e {
        Element::Mat2(m) => *m,
        other => panic!("atlas invariant: expected a spin-matrix payload, got {other}"),
    }
}

fn expect_mat3(e: &Element) -> Mat3Z {
    match e {
        Element::Mat3(m) => *m,
        other => panic!("atlas invariant: expected a rotation payload, got {other}"),
    }
}

fn expect_mat4(e: &Element) -> Mat4Z {
    match e {
        Element::Mat4(m) => *m,
        other => panic!("atlas invariant: expected a Lorentz payload, got {other}"),
    }
}

fn expect_semi(e: &Element) -> SemidirectElem {
    match e {
        Element::Semi(s) => *s,
        other => panic!("atlas invariant: expected a semidirect payload, got {other}"),
    }
}

fn expect_pair(e: &Element) -> (&Element, &Element) {
    match e {
        Element::Pair(a, b) => (a, b),
        other => panic!("atlas invariant: expected a pair payload, got {other}"),
    }
}

fn expect_coset(e: &Element) -> &Element {
    match e {
        Element::Coset(rep) => rep,
        other => panic!("atlas invariant: expected a coset payload, got {other}"),
    }
}

fn find_in(g: &Arc<FiniteGroup>, payload: &Element) -> Result<ElementId, AtlasError> {
    g.find_payload(payload)
        .ok_or_else(|| AtlasError::MissingPayload {
            group: g.name().to_string(),
            payload: payload.to_string(),
        })
}

/// Build a map by transporting payloads and locating them in the codomain.
fn map_by_payload<F>(
    name: &str,
    domain: &Arc<FiniteGroup>,
    codomain: &Arc<FiniteGroup>,
    transport: F,
) -> Result<GroupMap, AtlasError>
where
    F: Fn(&Element) -> Result<Element, AtlasError>,
{
    let mut images = Vec::with_capacity(domain.order());
    for x in domain.element_ids() {
        let target = transport(domain.payload(x))?;
        images.push(find_in(codomain, &target)?);
    }
    stage(name, GroupMap::new(name, domain, codomain, images))
}

/// A reconstructed group together with the isomorphism that certifies it.
#[derive(Debug)]
pub struct Reconstruction {
    pub group: Arc<FiniteGroup>,
    pub witness: GroupMap,
}

/// Named groups and maps, built once, immutable afterwards.
#[derive(Debug)]
pub struct Atlas {
    groups: IndexMap<String, Arc<FiniteGroup>>,
    maps: IndexMap<String, Arc<GroupMap>>,
    catalog: Catalog,
    cap: usize,
}

impl Atlas {
    /// Build with the default size cap.
    pub fn build() -> Result<Atlas, AtlasError> {
        Atlas::build_with_cap(DEFAULT_ORDER_CAP)
    }

    /// Build the whole atlas; `cap` bounds every closure and product.
    pub fn build_with_cap(cap: usize) -> Result<Atlas, AtlasError> {
        let mut groups: IndexMap<String, Arc<FiniteGroup>> = IndexMap::new();
        let mut maps: IndexMap<String, Arc<GroupMap>> = IndexMap::new();

        // --- matter side -------------------------------------------------
        let q = Arc::new(stage(
            "Q",
            close(
                "Q",
                vec![QuatUnit::IOTA, QuatUnit::GAMMA],
                |a, b| Ok(*a * *b),
                |u| u.to_string(),
                cap,
            ),
        )?);
        let z2 = Arc::new(stage(
            "Z2",
            close("Z2", vec![-1i64], |a, b| Ok(a * b), |v| v.to_string(), cap),
        )?);
        let g_psi = stage("G_psi", q.direct_product(&z2, "G_psi", cap))?;
        let (q_mod, rho_proj) =
            stage("Q_mod_center", q.quotient(&q.central_ids(), "Q_mod_center"))?;
        let g_a = stage("G_A", q_mod.direct_product(&z2, "G_A", cap))?;
        let g_qed = stage("G_QED", g_psi.direct_product(&g_a, "G_QED", cap))?;

        // --- geometry side -----------------------------------------------
        let h = Arc::new(stage(
            "H",
            close(
                "H",
                vec![minus_i_sigma(1), minus_i_sigma(2)],
                |a: &Mat2G, b: &Mat2G| Ok(a.mul(b)),
                spin_label,
                cap,
            ),
        )?);
        let phih = {
            let mut gen_rotations = Vec::new();
            for k in [1, 2] {
                let r = phi(&minus_i_sigma(k)).map_err(|source| AtlasError::Linear {
                    stage: "PhiH".into(),
                    source,
                })?;
                gen_rotations.push(r);
            }
            Arc::new(stage(
                "PhiH",
                close(
                    "PhiH",
                    gen_rotations,
                    |a: &Mat3Z, b: &Mat3Z| Ok(a.mul(b)),
                    rotation_label,
                    cap,
                ),
            )?)
        };
        let g_pt = Arc::new(stage(
            "G_PT",
            close(
                "G_PT",
                vec![Mat4Z::parity(), Mat4Z::time_reversal()],
                |a: &Mat4Z, b: &Mat4Z| Ok(a.mul(b)),
                lorentz_label,
                cap,
            ),
        )?);
        let p_id = find_in(&g_pt, &Mat4Z::parity().into())?;
        let t_id = find_in(&g_pt, &Mat4Z::time_reversal().into())?;
        let (p_sub, _) = stage("P_sub", g_pt.subgroup("P_sub", &[p_id]))?;
        let (t_sub, _) = stage("T_sub", g_pt.subgroup("T_sub", &[t_id]))?;

        let sl2c = Arc::new(stage(
            "SL2C_sub",
            close(
                "SL2C_sub",
                vec![minus_i_sigma(1), minus_i_sigma(2)],
                |a: &Mat2G, b: &Mat2G| Ok(a.mul(b)),
                spin_label,
                cap,
            ),
        )?);
        let soc31 = {
            let mut gens = Vec::new();
            for k in [1, 2] {
                let m = phi_tilde(&minus_i_sigma(k)).map_err(|source| AtlasError::Linear {
                    stage: "SOc31_sub".into(),
                    source,
                })?;
                gens.push(m);
            }
            Arc::new(stage(
                "SOc31_sub",
                close(
                    "SOc31_sub",
                    gens,
                    |a: &Mat4Z, b: &Mat4Z| Ok(a.mul(b)),
                    lorentz_label,
                    cap,
                ),
            )?)
        };
        let semi_product =
            |a: &SemidirectElem, b: &SemidirectElem| a.compose(b).map_err(GroupError::from);
        let pbar4c = Arc::new(stage(
            "Pbar4c_sub",
            close(
                "Pbar4c_sub",
                vec![
                    SemidirectElem::zero_translation(MatrixPart::Spin(minus_i_sigma(1))),
                    SemidirectElem::zero_translation(MatrixPart::Spin(minus_i_sigma(2))),
                ],
                semi_product,
                semi_label,
                cap,
            ),
        )?);
        let p4c = {
            let mut gens = Vec::new();
            for id in soc31.generators() {
                gens.push(SemidirectElem::zero_translation(MatrixPart::Lorentz(
                    expect_mat4(soc31.payload(*id)),
                )));
            }
            Arc::new(stage(
                "P4c_sub",
                close("P4c_sub", gens, semi_product, semi_label, cap),
            )?)
        };

        // --- maps ---------------------------------------------------------
        let iota = find_in(&q, &QuatUnit::IOTA.into())?;
        let gamma_q = find_in(&q, &QuatUnit::GAMMA.into())?;
        let s1 = find_in(&h, &minus_i_sigma(1).into())?;
        let s2 = find_in(&h, &minus_i_sigma(2).into())?;
        let lambda = stage(
            "lambda",
            GroupMap::hom_from_images("lambda", &q, &h, &[(iota, s1), (gamma_q, s2)]),
        )?;

        // Pairing of the central quotient with the parity/time-reversal
        // group: [ι]↦P, [γ]↦T, hence [κ]↦PT. The Klein group has six such
        // pairings; this one is fixed by convention and everything
        // downstream is verified against it.
        let mut pairing_images = vec![0 as ElementId; q_mod.order()];
        for c in q_mod.element_ids() {
            let rep = expect_quat(expect_coset(q_mod.payload(c)));
            let target = match rep.axis {
                QuatAxis::One => Mat4Z::identity(),
                QuatAxis::Iota => Mat4Z::parity(),
                QuatAxis::Gamma => Mat4Z::time_reversal(),
                QuatAxis::Kappa => Mat4Z::diag(-1, -1, -1, -1),
            };
            pairing_images[c] = find_in(&g_pt, &target.into())?;
        }
        let pairing = stage(
            "rho",
            GroupMap::new("pairing", &q_mod, &g_pt, pairing_images),
        )?;
        let pairing_inv = stage("rho", pairing.inverse())?;
        let rho = {
            let composed = stage("rho", rho_proj.then(&pairing))?;
            stage(
                "rho",
                GroupMap::new("rho", &q, &g_pt, composed.images().to_vec()),
            )?
        };

        let psi = {
            let mut images = Vec::with_capacity(g_psi.order());
            for x in g_psi.element_ids() {
                let (pq, pz) = expect_pair(g_psi.payload(x));
                let qid = find_in(&q, pq)?;
                let coset = rho_proj.apply(qid);
                let target = Element::pair(q_mod.payload(coset).clone(), pz.clone());
                images.push(find_in(&g_a, &target)?);
            }
            stage("psi", GroupMap::new("psi", &g_psi, &g_a, images))?
        };

        let mu_bar = {
            let mut images = Vec::with_capacity(g_pt.order());
            for m in g_pt.element_ids() {
                let coset = pairing_inv.apply(m);
                let rep = expect_quat(expect_coset(q_mod.payload(coset)));
                let qid = find_in(&q, &rep.into())?;
                let mat = expect_mat2(h.payload(lambda.apply(qid)));
                let r = phi(&mat).map_err(|source| AtlasError::Linear {
                    stage: "mu_bar".into(),
                    source,
                })?;
                images.push(find_in(&phih, &r.into())?);
            }
            stage("mu_bar", GroupMap::new("mu_bar", &g_pt, &phih, images))?
        };

        let alpha = {
            let mut images = Vec::with_capacity(q.order());
            for x in q.element_ids() {
                let target = Element::pair(q.payload(x).clone(), Element::Int(1));
                images.push(find_in(&g_psi, &target)?);
            }
            stage("alpha", GroupMap::new("alpha", &q, &g_psi, images))?
        };

        let alpha_bar = {
            let mut images = Vec::with_capacity(g_pt.order());
            for m in g_pt.element_ids() {
                let coset = pairing_inv.apply(m);
                let target = Element::pair(q_mod.payload(coset).clone(), Element::Int(1));
                images.push(find_in(&g_a, &target)?);
            }
            stage("alpha_bar", GroupMap::new("alpha_bar", &g_pt, &g_a, images))?
        };

        let beta = map_by_payload("beta", &h, &sl2c, |e| Ok(e.clone()))?;
        let beta_bar = map_by_payload("beta_bar", &phih, &soc31, |e| {
            Ok(block_embed(&expect_mat3(e)).into())
        })?;
        let gamma_map = map_by_payload("gamma_map", &sl2c, &pbar4c, |e| {
            Ok(SemidirectElem::zero_translation(MatrixPart::Spin(expect_mat2(e))).into())
        })?;
        let gamma_bar = map_by_payload("gamma_bar", &soc31, &p4c, |e| {
            Ok(SemidirectElem::zero_translation(MatrixPart::Lorentz(expect_mat4(e))).into())
        })?;

        let phi_restricted = map_by_payload("phi_restricted", &h, &phih, |e| {
            phi(&expect_mat2(e))
                .map(Element::from)
                .map_err(|source| AtlasError::Linear {
                    stage: "phi_restricted".into(),
                    source,
                })
        })?;
        let phi_tilde_restricted = map_by_payload("phi_tilde_restricted", &sl2c, &soc31, |e| {
            phi_tilde(&expect_mat2(e))
                .map(Element::from)
                .map_err(|source| AtlasError::Linear {
                    stage: "phi_tilde_restricted".into(),
                    source,
                })
        })?;
        let phi_double_restricted = map_by_payload("phi_double_restricted", &pbar4c, &p4c, |e| {
            phi_double(&expect_semi(e))
                .map(Element::from)
                .map_err(|source| AtlasError::Linear {
                    stage: "phi_double_restricted".into(),
                    source,
                })
        })?;

        // ν(q, g) = sg(g)·λ(q): the sign of the second component decides
        // between the two spin lifts of a rotation.
        let nu = {
            let mut images = Vec::with_capacity(g_psi.order());
            for x in g_psi.element_ids() {
                let (pq, pz) = expect_pair(g_psi.payload(x));
                let qid = find_in(&q, pq)?;
                let mat = expect_mat2(h.payload(lambda.apply(qid)));
                let signed = match pz {
                    Element::Int(1) => mat,
                    Element::Int(-1) => -mat,
                    other => panic!("atlas invariant: sign payload was {other}"),
                };
                images.push(find_in(&h, &signed.into())?);
            }
            stage("nu", GroupMap::new("nu", &g_psi, &h, images))?
        };

        // ν̄ is induced on the quotient: both elements of each ψ-fiber must
        // push to the same rotation, and that agreement is checked here,
        // not assumed.
        let nu_bar = {
            let mut images = vec![None::<ElementId>; g_a.order()];
            for y in g_psi.element_ids() {
                let a = psi.apply(y);
                let candidate = phi_restricted.apply(nu.apply(y));
                match images[a] {
                    None => images[a] = Some(candidate),
                    Some(prev) if prev == candidate => {}
                    Some(_) => {
                        return Err(AtlasError::IllDefined {
                            map: "nu_bar".into(),
                            element: g_a.label(a).to_string(),
                        })
                    }
                }
            }
            let images: Vec<ElementId> = images
                .into_iter()
                .map(|i| i.expect("psi is surjective, every class is covered"))
                .collect();
            stage("nu_bar", GroupMap::new("nu_bar", &g_a, &phih, images))?
        };

        let varphi = {
            let composed = stage("varphi", stage("varphi", nu.then(&beta))?.then(&gamma_map))?;
            stage(
                "varphi",
                GroupMap::new("varphi", &g_psi, &pbar4c, composed.images().to_vec()),
            )?
        };
        let varphi_bar = {
            let composed = stage(
                "varphi_bar",
                stage("varphi_bar", nu_bar.then(&beta_bar))?.then(&gamma_bar),
            )?;
            stage(
                "varphi_bar",
                GroupMap::new("varphi_bar", &g_a, &p4c, composed.images().to_vec()),
            )?
        };

        for (name, g) in [
            ("Q", &q),
            ("Z2", &z2),
            ("G_psi", &g_psi),
            ("Q_mod_center", &q_mod),
            ("G_A", &g_a),
            ("G_QED", &g_qed),
            ("H", &h),
            ("PhiH", &phih),
            ("G_PT", &g_pt),
            ("P_sub", &p_sub),
            ("T_sub", &t_sub),
            ("SL2C_sub", &sl2c),
            ("SOc31_sub", &soc31),
            ("Pbar4c_sub", &pbar4c),
            ("P4c_sub", &p4c),
        ] {
            groups.insert(name.to_string(), Arc::clone(g));
        }
        for (name, m) in [
            ("lambda", lambda),
            ("rho", rho),
            ("psi", psi),
            ("mu_bar", mu_bar),
            ("alpha", alpha),
            ("alpha_bar", alpha_bar),
            ("beta", beta),
            ("beta_bar", beta_bar),
            ("gamma_map", gamma_map),
            ("gamma_bar", gamma_bar),
            ("nu", nu),
            ("nu_bar", nu_bar),
            ("varphi", varphi),
            ("varphi_bar", varphi_bar),
            ("phi_restricted", phi_restricted),
            ("phi_tilde_restricted", phi_tilde_restricted),
            ("phi_double_restricted", phi_double_restricted),
        ] {
            maps.insert(name.to_string(), Arc::new(m));
        }

        Ok(Atlas {
            groups,
            maps,
            catalog: Catalog::standard(),
            cap,
        })
    }

    pub fn group(&self, name: &str) -> Result<&Arc<FiniteGroup>, AtlasError> {
        self.groups
            .get(name)
            .ok_or_else(|| AtlasError::UnknownGroup(name.to_string()))
    }

    pub fn map(&self, name: &str) -> Result<&Arc<GroupMap>, AtlasError> {
        self.maps
            .get(name)
            .ok_or_else(|| AtlasError::UnknownMap(name.to_string()))
    }

    pub fn group_names(&self) -> Vec<&str> {
        self.groups.keys().map(String::as_str).collect()
    }

    pub fn map_names(&self) -> Vec<&str> {
        self.maps.keys().map(String::as_str).collect()
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Replace a registered group. Intended for test fixtures that need a
    /// deliberately corrupted table; maps keep referencing the original.
    pub fn override_group(
        &mut self,
        name: &str,
        group: Arc<FiniteGroup>,
    ) -> Result<(), AtlasError> {
        match self.groups.get_mut(name) {
            Some(slot) => {
                *slot = group;
                Ok(())
            }
            None => Err(AtlasError::UnknownGroup(name.to_string())),
        }
    }

    /// Rebuild the sixteen-element matter group from geometry: enumerate
    /// the sixteen unit-scalar multiples of the identity and the three
    /// Pauli matrices, keep those that are special unitary with rotation
    /// image inside `PhiH`, close them, extend by the sign group, and
    /// certify the result against `G_psi`.
    pub fn reconstruct_dirac_group(&self) -> Result<Reconstruction, AtlasError> {
        let phih = self.group("PhiH")?;
        let g_psi = self.group("G_psi")?;
        let z2 = self.group("Z2")?;
        let scalars = [
            GaussInt::ONE,
            GaussInt::MINUS_ONE,
            GaussInt::I,
            GaussInt::MINUS_I,
        ];
        let base = [Mat2G::identity(), pauli(1), pauli(2), pauli(3)];
        let mut preimage: Vec<Mat2G> = Vec::new();
        for b in &base {
            for s in scalars {
                let m = b.scale(s);
                if !m.is_special_unitary() {
                    continue;
                }
                let r = phi(&m).map_err(|source| AtlasError::Linear {
                    stage: "dirac reconstruction".into(),
                    source,
                })?;
                if phih.find_payload(&r.into()).is_some() {
                    preimage.push(m);
                }
            }
        }
        if preimage.len() != 8 {
            return Err(AtlasError::ReconstructionFailed(format!(
                "rotation preimage has {} elements, expected 8",
                preimage.len()
            )));
        }
        if !preimage.contains(&-Mat2G::identity()) {
            return Err(AtlasError::ReconstructionFailed(
                "rotation preimage misses -I".into(),
            ));
        }
        let pre_group = Arc::new(stage(
            "dirac reconstruction",
            close(
                "preimage",
                preimage,
                |a, b| Ok(a.mul(b)),
                spin_label,
                self.cap,
            ),
        )?);
        let product = stage(
            "dirac reconstruction",
            pre_group.direct_product(z2, "preimage x Z2", self.cap),
        )?;
        let witness = is_isomorphic(&product, g_psi).ok_or_else(|| {
            AtlasError::ReconstructionFailed("preimage x Z2 is not isomorphic to G_psi".into())
        })?;
        Ok(Reconstruction {
            group: product,
            witness,
        })
    }

    fn reconstruct_photon_route(&self, factor: &str) -> Result<Reconstruction, AtlasError> {
        let g_pt = self.group("G_PT")?;
        let sub = self.group(factor)?;
        let g_a = self.group("G_A")?;
        let name = format!("G_PT x {factor}");
        let product = stage(&name, g_pt.direct_product(sub, &name, self.cap))?;
        let identified = self
            .catalog
            .identify(&product)
            .map_err(|e| AtlasError::ReconstructionFailed(format!("{name}: {e}")))?;
        if identified != "Z2^3" {
            return Err(AtlasError::ReconstructionFailed(format!(
                "{name} identifies as {identified}, expected Z2^3"
            )));
        }
        let witness = is_isomorphic(&product, g_a).ok_or_else(|| {
            AtlasError::ReconstructionFailed(format!("{name} is not isomorphic to G_A"))
        })?;
        Ok(Reconstruction {
            group: product,
            witness,
        })
    }

    /// Rebuild the eight-element gauge group as `G_PT × ⟨P⟩`.
    pub fn reconstruct_photon_group_via_parity(&self) -> Result<Reconstruction, AtlasError> {
        self.reconstruct_photon_route("P_sub")
    }

    /// Rebuild the eight-element gauge group as `G_PT × ⟨T⟩`.
    pub fn reconstruct_photon_group_via_time_reversal(&self) -> Result<Reconstruction, AtlasError> {
        self.reconstruct_photon_route("T_sub")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atlas() -> Atlas {
        Atlas::build().expect("the atlas builds")
    }

    #[test]
    fn registry_names_are_stable() {
        let a = atlas();
        assert_eq!(
            a.group_names(),
            [
                "Q",
                "Z2",
                "G_psi",
                "Q_mod_center",
                "G_A",
                "G_QED",
                "H",
                "PhiH",
                "G_PT",
                "P_sub",
                "T_sub",
                "SL2C_sub",
                "SOc31_sub",
                "Pbar4c_sub",
                "P4c_sub"
            ]
        );
        assert_eq!(
            a.map_names(),
            [
                "lambda",
                "rho",
                "psi",
                "mu_bar",
                "alpha",
                "alpha_bar",
                "beta",
                "beta_bar",
                "gamma_map",
                "gamma_bar",
                "nu",
                "nu_bar",
                "varphi",
                "varphi_bar",
                "phi_restricted",
                "phi_tilde_restricted",
                "phi_double_restricted"
            ]
        );
    }

    #[test]
    fn group_orders_are_frozen() {
        let a = atlas();
        let expected = [
            ("Q", 8),
            ("Z2", 2),
            ("G_psi", 16),
            ("Q_mod_center", 4),
            ("G_A", 8),
            ("G_QED", 128),
            ("H", 8),
            ("PhiH", 4),
            ("G_PT", 4),
            ("P_sub", 2),
            ("T_sub", 2),
            ("SL2C_sub", 8),
            ("SOc31_sub", 4),
            ("Pbar4c_sub", 8),
            ("P4c_sub", 4),
        ];
        for (name, order) in expected {
            assert_eq!(a.group(name).unwrap().order(), order, "order of {name}");
        }
    }

    #[test]
    fn lambda_sends_units_to_spin_matrices() {
        let a = atlas();
        let q = a.group("Q").unwrap();
        let h = a.group("H").unwrap();
        let lambda = a.map("lambda").unwrap();
        assert!(lambda.is_bijective());
        let check = |u: QuatUnit, m: Mat2G| {
            let x = q.find_payload(&u.into()).unwrap();
            assert_eq!(h.payload(lambda.apply(x)), &m.into());
        };
        check(QuatUnit::IOTA, minus_i_sigma(1));
        check(QuatUnit::GAMMA, minus_i_sigma(2));
        check(QuatUnit::KAPPA, minus_i_sigma(3));
        check(QuatUnit::MINUS_ONE, -Mat2G::identity());
    }

    #[test]
    fn psi_kernel_is_the_embedded_center() {
        let a = atlas();
        let g_psi = a.group("G_psi").unwrap();
        let psi = a.map("psi").unwrap();
        let kernel = psi.kernel_ids();
        let expected: Vec<ElementId> = [
            Element::pair(QuatUnit::ONE.into(), Element::Int(1)),
            Element::pair(QuatUnit::MINUS_ONE.into(), Element::Int(1)),
        ]
        .iter()
        .map(|p| g_psi.find_payload(p).unwrap())
        .collect();
        assert_eq!(
            kernel
                .iter()
                .copied()
                .collect::<std::collections::BTreeSet<_>>(),
            expected.iter().copied().collect()
        );
        assert_eq!(psi.fiber_degree().unwrap(), 2);
    }

    #[test]
    fn nu_values_are_frozen() {
        let a = atlas();
        let g_psi = a.group("G_psi").unwrap();
        let h = a.group("H").unwrap();
        let nu = a.map("nu").unwrap();
        let at = |u: QuatUnit, sign: i64| {
            let x = g_psi
                .find_payload(&Element::pair(u.into(), Element::Int(sign)))
                .unwrap();
            h.payload(nu.apply(x)).clone()
        };
        assert_eq!(at(QuatUnit::IOTA, 1), minus_i_sigma(1).into());
        assert_eq!(at(QuatUnit::IOTA, -1), (-minus_i_sigma(1)).into());
        // The characteristic two-to-one collapse: (q,−1) and (−q,1) agree.
        for u in QuatUnit::all() {
            assert_eq!(at(u, -1), at(-u, 1), "at {u}");
        }
        // Kernel is the diagonal pair {(1,1), (−1,−1)}.
        let kernel = nu.kernel_ids();
        assert_eq!(kernel.len(), 2);
        let diag = g_psi
            .find_payload(&Element::pair(QuatUnit::MINUS_ONE.into(), Element::Int(-1)))
            .unwrap();
        assert!(kernel.contains(&diag));
        assert_eq!(nu.fiber_degree().unwrap(), 2);
    }

    #[test]
    fn nu_bar_pushes_fibers_to_rotations() {
        let a = atlas();
        let g_psi = a.group("G_psi").unwrap();
        let phih = a.group("PhiH").unwrap();
        let psi = a.map("psi").unwrap();
        let nu_bar = a.map("nu_bar").unwrap();
        let x = g_psi
            .find_payload(&Element::pair(QuatUnit::IOTA.into(), Element::Int(1)))
            .unwrap();
        let image = nu_bar.apply(psi.apply(x));
        assert_eq!(phih.payload(image), &Mat3Z::diag(1, -1, -1).into());
        assert_eq!(phih.label(image), "Rx(π)");
        assert_eq!(nu_bar.fiber_degree().unwrap(), 2);
    }

    #[test]
    fn mu_bar_pairs_the_two_klein_groups() {
        let a = atlas();
        let g_pt = a.group("G_PT").unwrap();
        let phih = a.group("PhiH").unwrap();
        let mu_bar = a.map("mu_bar").unwrap();
        assert!(mu_bar.is_bijective());
        let p = g_pt.find_payload(&Mat4Z::parity().into()).unwrap();
        assert_eq!(
            phih.payload(mu_bar.apply(p)),
            &Mat3Z::diag(1, -1, -1).into()
        );
        let t = g_pt.find_payload(&Mat4Z::time_reversal().into()).unwrap();
        assert_eq!(
            phih.payload(mu_bar.apply(t)),
            &Mat3Z::diag(-1, 1, -1).into()
        );
    }

    #[test]
    fn varphi_lands_on_zero_translation_spin_elements() {
        let a = atlas();
        let g_psi = a.group("G_psi").unwrap();
        let pbar = a.group("Pbar4c_sub").unwrap();
        let varphi = a.map("varphi").unwrap();
        let x = g_psi
            .find_payload(&Element::pair(QuatUnit::IOTA.into(), Element::Int(1)))
            .unwrap();
        let expected = SemidirectElem::zero_translation(MatrixPart::Spin(minus_i_sigma(1)));
        assert_eq!(pbar.payload(varphi.apply(x)), &expected.into());
        assert_eq!(varphi.fiber_degree().unwrap(), 2);
    }

    #[test]
    fn the_big_group_has_the_expected_shape() {
        let a = atlas();
        let g_qed = a.group("G_QED").unwrap();
        assert_eq!(g_qed.order(), 128);
        assert!(!g_qed.is_abelian());
        // Center size found by plain enumeration.
        assert_eq!(g_qed.central_ids().len(), 32);
    }

    #[test]
    fn catalog_names_of_the_headline_groups() {
        let a = atlas();
        let cat = a.catalog();
        assert_eq!(cat.identify(a.group("Q").unwrap()).unwrap(), "Q8");
        assert_eq!(cat.identify(a.group("G_psi").unwrap()).unwrap(), "Q8 x Z2");
        assert_eq!(cat.identify(a.group("G_A").unwrap()).unwrap(), "Z2^3");
        assert_eq!(
            cat.identify(a.group("G_QED").unwrap()).unwrap(),
            "(Q8 x Z2) x Z2^3"
        );
        assert_eq!(cat.identify(a.group("PhiH").unwrap()).unwrap(), "Klein D2");
        assert_eq!(cat.identify(a.group("G_PT").unwrap()).unwrap(), "Klein D2");
    }

    #[test]
    fn rotation_image_is_exactly_the_axis_half_turns() {
        let a = atlas();
        let phih = a.group("PhiH").unwrap();
        let expected = [
            Mat3Z::identity(),
            Mat3Z::diag(1, -1, -1),
            Mat3Z::diag(-1, 1, -1),
            Mat3Z::diag(-1, -1, 1),
        ];
        assert_eq!(phih.order(), expected.len());
        for m in expected {
            assert!(phih.find_payload(&m.into()).is_some(), "missing {m}");
        }
    }

    #[test]
    fn reconstructions_certify_themselves() {
        let a = atlas();
        let dirac = a.reconstruct_dirac_group().unwrap();
        assert_eq!(dirac.group.order(), 16);
        dirac.witness.verify().unwrap();
        assert!(dirac.witness.is_bijective());

        for rec in [
            a.reconstruct_photon_group_via_parity().unwrap(),
            a.reconstruct_photon_group_via_time_reversal().unwrap(),
        ] {
            assert_eq!(rec.group.order(), 8);
            rec.witness.verify().unwrap();
            assert!(rec.witness.is_bijective());
        }
    }

    #[test]
    fn unknown_names_are_reported() {
        let a = atlas();
        assert!(matches!(a.group("nope"), Err(AtlasError::UnknownGroup(_))));
        assert!(matches!(a.map("nope"), Err(AtlasError::UnknownMap(_))));
    }

    #[test]
    fn a_small_cap_stops_the_big_product() {
        let err = Atlas::build_with_cap(64).unwrap_err();
        match err {
            AtlasError::Group { stage, source } => {
                assert_eq!(stage, "G_QED");
                assert!(matches!(source, GroupError::CapExceeded { cap: 64 }));
            }
            other => panic!("expected a cap failure, got {other:?}"),
        }
    }

    #[test]
    fn spin_labels_follow_the_conventional_names() {
        let a = atlas();
        let h = a.group("H").unwrap();
        let id = h.find_payload(&minus_i_sigma(3).into()).unwrap();
        assert_eq!(h.label(id), "-iσ3");
        let neg = h.find_payload(&(-minus_i_sigma(3)).into()).unwrap();
        assert_eq!(h.label(neg), "iσ3");
        let g_pt = a.group("G_PT").unwrap();
        let labels: std::collections::BTreeSet<&str> =
            g_pt.element_ids().map(|i| g_pt.label(i)).collect();
        assert_eq!(labels, ["E", "P", "PT", "T"].into_iter().collect());
    }
}
