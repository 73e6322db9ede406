//! Homomorphisms between finite groups, verified at construction.
//!
//! A [`GroupMap`] stores the full image table. Building one from images
//! of all elements re-checks the homomorphism law on every pair; building
//! one from generator images extends the assignment breadth first over
//! words and reports the earliest conflicting product if the assignment
//! does not extend. Either way, a map that exists is a homomorphism.

use std::sync::Arc;

use super::element::ElementId;
use super::finite::FiniteGroup;
use super::GroupError;

/// A homomorphism between two table groups, stored elementwise.
#[derive(Clone, Debug)]
pub struct GroupMap {
    name: String,
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    /// `images[x]` is the codomain id of the image of domain id `x`.
    images: Vec<ElementId>,
}

impl GroupMap {
    /// Build a map from a complete image table, verifying it is a
    /// homomorphism.
    pub fn new(
        name: &str,
        domain: &Arc<FiniteGroup>,
        codomain: &Arc<FiniteGroup>,
        images: Vec<ElementId>,
    ) -> Result<GroupMap, GroupError> {
        let map = GroupMap {
            name: name.to_string(),
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            images,
        };
        map.verify()?;
        Ok(map)
    }

    /// Extend images of the generators to the whole domain, breadth
    /// first over words. Every generator must be assigned; a conflict
    /// between two words for the same element is reported with the
    /// earliest witnessing product.
    pub fn hom_from_images(
        name: &str,
        domain: &Arc<FiniteGroup>,
        codomain: &Arc<FiniteGroup>,
        pairs: &[(ElementId, ElementId)],
    ) -> Result<GroupMap, GroupError> {
        let n = domain.order();
        let mut assigned: Vec<Option<ElementId>> = vec![None; n];
        assigned[domain.identity()] = Some(codomain.identity());
        for &(x, y) in pairs {
            if x >= n {
                return Err(GroupError::BadElementId { id: x, order: n });
            }
            if y >= codomain.order() {
                return Err(GroupError::BadElementId {
                    id: y,
                    order: codomain.order(),
                });
            }
            match assigned[x] {
                None => assigned[x] = Some(y),
                Some(old) if old == y => {}
                Some(old) => {
                    return Err(GroupError::NotAHomomorphism {
                        x: domain.label(x).to_string(),
                        y: domain.label(x).to_string(),
                        xy: domain.label(x).to_string(),
                        detail: format!(
                            "conflicting images {} and {} assigned to one generator",
                            codomain.label(old),
                            codomain.label(y)
                        ),
                    });
                }
            }
        }
        for &g in domain.generators() {
            if assigned[g].is_none() {
                return Err(GroupError::MissingGeneratorImage(
                    domain.label(g).to_string(),
                ));
            }
        }
        let seeds: Vec<ElementId> = pairs.iter().map(|&(x, _)| x).collect();
        // Reach every element as (known)·(seed) and push its forced image.
        let mut frontier: Vec<ElementId> = vec![domain.identity()];
        for &(x, _) in pairs {
            if !frontier.contains(&x) {
                frontier.push(x);
            }
        }
        let mut next = 0;
        while next < frontier.len() {
            let x = frontier[next];
            for &s in &seeds {
                let xs = domain.mul(x, s);
                let forced = codomain.mul(assigned[x].unwrap(), assigned[s].unwrap());
                match assigned[xs] {
                    None => {
                        assigned[xs] = Some(forced);
                        frontier.push(xs);
                    }
                    Some(prev) if prev == forced => {}
                    Some(prev) => {
                        return Err(GroupError::NotAHomomorphism {
                            x: domain.label(x).to_string(),
                            y: domain.label(s).to_string(),
                            xy: domain.label(xs).to_string(),
                            detail: format!(
                                "word images disagree: {} vs {}",
                                codomain.label(prev),
                                codomain.label(forced)
                            ),
                        });
                    }
                }
            }
            next += 1;
        }
        if let Some(x) = (0..n).find(|&x| assigned[x].is_none()) {
            return Err(GroupError::MissingGeneratorImage(format!(
                "{} is not reachable from the assigned generators",
                domain.label(x)
            )));
        }
        GroupMap::new(
            name,
            domain,
            codomain,
            assigned.into_iter().map(Option::unwrap).collect(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.images[x]
    }

    pub fn images(&self) -> &[ElementId] {
        &self.images
    }

    /// Re-check identity preservation and the homomorphism law on every
    /// pair, reporting the first failing product in row order.
    pub fn verify(&self) -> Result<(), GroupError> {
        let n = self.domain.order();
        if self.images.len() != n {
            return Err(GroupError::NotAHomomorphism {
                x: String::new(),
                y: String::new(),
                xy: String::new(),
                detail: format!(
                    "image table has {} entries for order {n}",
                    self.images.len()
                ),
            });
        }
        if let Some(&bad) = self.images.iter().find(|&&y| y >= self.codomain.order()) {
            return Err(GroupError::BadElementId {
                id: bad,
                order: self.codomain.order(),
            });
        }
        if self.images[self.domain.identity()] != self.codomain.identity() {
            return Err(GroupError::NotAHomomorphism {
                x: self.domain.label(self.domain.identity()).to_string(),
                y: self.domain.label(self.domain.identity()).to_string(),
                xy: self.domain.label(self.domain.identity()).to_string(),
                detail: "identity does not map to the identity".into(),
            });
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.domain.mul(x, y);
                if self.images[xy] != self.codomain.mul(self.images[x], self.images[y]) {
                    return Err(GroupError::NotAHomomorphism {
                        x: self.domain.label(x).to_string(),
                        y: self.domain.label(y).to_string(),
                        xy: self.domain.label(xy).to_string(),
                        detail: format!(
                            "image of the product is {}, product of the images is {}",
                            self.codomain.label(self.images[xy]),
                            self.codomain
                                .label(self.codomain.mul(self.images[x], self.images[y]))
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        self.images
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    /// Codomain ids hit by the map, each once, in ascending order.
    pub fn image_ids(&self) -> Vec<ElementId> {
        let mut seen = vec![false; self.codomain.order()];
        for &y in &self.images {
            seen[y] = true;
        }
        (0..self.codomain.order()).filter(|&y| seen[y]).collect()
    }

    /// The image as a subgroup of the codomain, with its inclusion.
    pub fn image_subgroup(&self, name: &str) -> Result<(Arc<FiniteGroup>, GroupMap), GroupError> {
        self.codomain.subgroup(name, &self.image_ids())
    }

    /// The kernel as a subgroup of the domain, with its inclusion.
    pub fn kernel(&self) -> Result<(Arc<FiniteGroup>, GroupMap), GroupError> {
        let ids: Vec<ElementId> = (0..self.domain.order())
            .filter(|&x| self.images[x] == self.codomain.identity())
            .collect();
        self.domain.subgroup(&format!("ker({})", self.name), &ids)
    }

    /// Kernel element ids inside the domain.
    pub fn kernel_ids(&self) -> Vec<ElementId> {
        (0..self.domain.order())
            .filter(|&x| self.images[x] == self.codomain.identity())
            .collect()
    }

    /// The common fiber size over the image, if all fibers agree.
    pub fn fiber_degree(&self) -> Result<usize, GroupError> {
        let mut counts = vec![0usize; self.codomain.order()];
        for &y in &self.images {
            counts[y] += 1;
        }
        let hit: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
        let first = hit[0];
        if let Some(other) = hit.iter().find(|&&c| c != first) {
            return Err(GroupError::NonUniformFibers(format!(
                "fibers of {} have sizes {first} and {other}",
                self.name
            )));
        }
        Ok(first)
    }

    /// Composition `next ∘ self`; the codomain of `self` must be the
    /// same group object as the domain of `next`.
    pub fn then(&self, next: &GroupMap) -> Result<GroupMap, GroupError> {
        if !Arc::ptr_eq(&self.codomain, &next.domain) {
            return Err(GroupError::NotComposable(format!(
                "{} ends in {} but {} starts in {}",
                self.name,
                self.codomain.name(),
                next.name,
                next.domain.name()
            )));
        }
        GroupMap::new(
            &format!("{}∘{}", next.name, self.name),
            &self.domain,
            &next.codomain,
            self.images.iter().map(|&y| next.images[y]).collect(),
        )
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Result<GroupMap, GroupError> {
        if !self.is_bijective() {
            return Err(GroupError::NotBijective(self.name.clone()));
        }
        let mut inv = vec![0 as ElementId; self.codomain.order()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        GroupMap::new(
            &format!("{}⁻¹", self.name),
            &self.codomain,
            &self.domain,
            inv,
        )
    }
}
