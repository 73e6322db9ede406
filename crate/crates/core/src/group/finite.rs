//! Finite groups as explicit multiplication tables.
//!
//! Groups are built by closing a generator list under a concrete product,
//! or derived from existing groups (subgroup, center, direct product,
//! quotient). Construction always ends in a full validation pass: Latin
//! square, associativity on every triple, identity, two-sided inverses,
//! and generators that actually generate. Nothing downstream has to trust
//! a table it did not check.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::element::{Element, ElementId};
use super::map::GroupMap;
use super::GroupError;

/// Default bound on closure size; generous for everything this crate builds.
pub const DEFAULT_ORDER_CAP: usize = 1024;

/// A finite group: carrier payloads, labels, and a complete product table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    carrier: Vec<Element>,
    labels: Vec<String>,
    /// Row-major `n × n` table: `table[a * n + b]` is the id of `a·b`.
    table: Vec<ElementId>,
    identity: ElementId,
    inverses: Vec<ElementId>,
    generators: Vec<ElementId>,
}

/// A rendered multiplication table, ready for text/CSV/JSON output.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CayleyTable {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Close a generator list under an exact product and return the group.
///
/// Discovery is breadth first over right multiplication by the
/// generators; the result is reindexed so the identity is element `0`,
/// followed by the remaining elements in discovery order. The `cap`
/// bounds how many elements the closure may reach.
pub fn close<T, P, L>(
    name: &str,
    generators: Vec<T>,
    product: P,
    label: L,
    cap: usize,
) -> Result<FiniteGroup, GroupError>
where
    T: Clone + PartialEq + Into<Element>,
    P: Fn(&T, &T) -> Result<T, GroupError>,
    L: Fn(&T) -> String,
{
    if generators.is_empty() {
        return Err(GroupError::EmptyGenerators);
    }
    let mut gens: Vec<T> = Vec::new();
    for g in generators {
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    let mut elems: Vec<T> = gens.clone();
    let mut next = 0;
    while next < elems.len() {
        for g in &gens {
            let p = product(&elems[next], g)?;
            if !elems.contains(&p) {
                if elems.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                elems.push(p);
            }
        }
        next += 1;
    }

    let n = elems.len();
    let mut table = vec![0 as ElementId; n * n];
    for a in 0..n {
        for b in 0..n {
            let p = product(&elems[a], &elems[b])?;
            let idx = elems.iter().position(|e| *e == p).ok_or_else(|| {
                GroupError::NotAGroup(format!(
                    "product {}·{} escapes the generated set",
                    label(&elems[a]),
                    label(&elems[b])
                ))
            })?;
            table[a * n + b] = idx;
        }
    }

    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
        .ok_or_else(|| GroupError::NotAGroup("closure has no identity element".into()))?;

    // Identity first, then discovery order.
    let mut order = Vec::with_capacity(n);
    order.push(identity);
    order.extend((0..n).filter(|&x| x != identity));
    let mut new_index = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }

    let labels: Vec<String> = order.iter().map(|&old| label(&elems[old])).collect();
    let carrier: Vec<Element> = order.iter().map(|&old| elems[old].clone().into()).collect();
    let mut final_table = vec![0 as ElementId; n * n];
    for a in 0..n {
        for b in 0..n {
            final_table[a * n + b] = new_index[table[order[a] * n + order[b]]];
        }
    }
    let generator_ids: Vec<ElementId> = (0..gens.len()).map(|g| new_index[g]).collect();

    FiniteGroup::assemble(name, carrier, labels, final_table, generator_ids)
}

impl FiniteGroup {
    /// Finish a construction: find inverses, then run the full validation.
    fn assemble(
        name: &str,
        carrier: Vec<Element>,
        labels: Vec<String>,
        table: Vec<ElementId>,
        generators: Vec<ElementId>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = carrier.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or_else(|| GroupError::NotAGroup("table has no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x * n + y] == identity && table[y * n + x] == identity)
                .ok_or_else(|| {
                    GroupError::NotAGroup(format!("element {} has no inverse", labels[x]))
                })?;
            inverses.push(inv);
        }
        let group = FiniteGroup {
            name: name.to_string(),
            carrier,
            labels,
            table,
            identity,
            inverses,
            generators,
        };
        group.validate()?;
        Ok(group)
    }

    /// Build a group from raw parts without any validation.
    ///
    /// This exists for fixtures that need a deliberately broken table (to
    /// exercise the checker); ordinary construction goes through [`close`]
    /// and the derived constructors, which always validate.
    pub fn from_parts_unchecked(
        name: &str,
        carrier: Vec<Element>,
        labels: Vec<String>,
        table: Vec<ElementId>,
        identity: ElementId,
        inverses: Vec<ElementId>,
        generators: Vec<ElementId>,
    ) -> FiniteGroup {
        FiniteGroup {
            name: name.to_string(),
            carrier,
            labels,
            table,
            identity,
            inverses,
            generators,
        }
    }

    /// A copy of this group with one table entry overwritten, unvalidated.
    /// Fixture helper: the result is usually not a group.
    pub fn with_table_entry(
        &self,
        row: ElementId,
        col: ElementId,
        value: ElementId,
    ) -> FiniteGroup {
        let mut copy = self.clone();
        copy.table[row * self.order() + col] = value;
        copy
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    /// Product of two elements by table lookup.
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order() + b]
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inverses[a]
    }

    pub fn payload(&self, id: ElementId) -> &Element {
        &self.carrier[id]
    }

    pub fn label(&self, id: ElementId) -> &str {
        &self.labels[id]
    }

    pub fn element_ids(&self) -> impl Iterator<Item = ElementId> {
        0..self.order()
    }

    /// Find the id carrying a given payload, if any.
    pub fn find_payload(&self, payload: &Element) -> Option<ElementId> {
        self.carrier.iter().position(|e| e == payload)
    }

    /// Multiplicative order of an element.
    ///
    /// Panics if no power reaches the identity, which can only happen on
    /// a corrupted table; callers that feed unvalidated tables (the check
    /// harness) catch that.
    pub fn element_order(&self, id: ElementId) -> usize {
        let mut acc = id;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, id);
            k += 1;
            assert!(k <= self.order(), "element order exceeded group order");
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Ids whose elements commute with everything.
    pub fn central_ids(&self) -> Vec<ElementId> {
        let n = self.order();
        (0..n)
            .filter(|&z| (0..n).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    /// Closure of a seed set inside this group, in discovery order
    /// starting from the identity.
    pub fn closure_of(&self, seed: &[ElementId]) -> Vec<ElementId> {
        let mut members = vec![self.identity];
        for &s in seed {
            if !members.contains(&s) {
                members.push(s);
            }
        }
        let mut next = 0;
        while next < members.len() {
            for &s in seed {
                let p = self.mul(members[next], s);
                if !members.contains(&p) {
                    members.push(p);
                }
            }
            next += 1;
        }
        members
    }

    /// Full law check: shape, Latin square, identity, inverses,
    /// associativity on every triple, and generators that generate.
    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.order();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty carrier".into()));
        }
        if self.labels.len() != n || self.inverses.len() != n || self.table.len() != n * n {
            return Err(GroupError::NotAGroup(
                "inconsistent table dimensions".into(),
            ));
        }
        for id in self
            .table
            .iter()
            .chain(self.inverses.iter())
            .chain(self.generators.iter())
            .chain(std::iter::once(&self.identity))
        {
            if *id >= n {
                return Err(GroupError::NotAGroup(format!(
                    "element id {id} out of range for order {n}"
                )));
            }
        }
        // Latin square: every row and column is a permutation.
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                let r = self.mul(a, b);
                if seen_row[r] {
                    return Err(GroupError::NotAGroup(format!(
                        "row {} repeats value {}",
                        self.labels[a], self.labels[r]
                    )));
                }
                seen_row[r] = true;
                let c = self.mul(b, a);
                if seen_col[c] {
                    return Err(GroupError::NotAGroup(format!(
                        "column {} repeats value {}",
                        self.labels[a], self.labels[c]
                    )));
                }
                seen_col[c] = true;
            }
        }
        let e = self.identity;
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(GroupError::NotAGroup(format!(
                    "identity fails on {}",
                    self.labels[x]
                )));
            }
            let y = self.inverses[x];
            if self.mul(x, y) != e || self.mul(y, x) != e {
                return Err(GroupError::NotAGroup(format!(
                    "inverse fails on {}",
                    self.labels[x]
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails on ({},{},{})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        if self.closure_of(&self.generators).len() != n {
            return Err(GroupError::NotAGroup(
                "recorded generators do not generate the group".into(),
            ));
        }
        Ok(())
    }

    /// The subgroup generated by `seed`, plus its inclusion into `self`.
    pub fn subgroup(
        self: &Arc<Self>,
        name: &str,
        seed: &[ElementId],
    ) -> Result<(Arc<FiniteGroup>, GroupMap), GroupError> {
        let n = self.order();
        if let Some(&bad) = seed.iter().find(|&&s| s >= n) {
            return Err(GroupError::BadElementId { id: bad, order: n });
        }
        let members = self.closure_of(seed);
        let mut position = vec![usize::MAX; n];
        for (i, &m) in members.iter().enumerate() {
            position[m] = i;
        }
        let k = members.len();
        let mut table = vec![0 as ElementId; k * k];
        for a in 0..k {
            for b in 0..k {
                table[a * k + b] = position[self.mul(members[a], members[b])];
            }
        }
        let carrier: Vec<Element> = members.iter().map(|&m| self.carrier[m].clone()).collect();
        let labels: Vec<String> = members.iter().map(|&m| self.labels[m].clone()).collect();
        let mut generators: Vec<ElementId> = Vec::new();
        for &s in seed {
            let p = position[s];
            if !generators.contains(&p) {
                generators.push(p);
            }
        }
        if generators.is_empty() {
            generators.push(position[self.identity]);
        }
        let sub = Arc::new(FiniteGroup::assemble(
            name, carrier, labels, table, generators,
        )?);
        let inclusion = GroupMap::new(&format!("incl {name}"), &sub, self, members)?;
        Ok((sub, inclusion))
    }

    /// The center, as a subgroup with its inclusion.
    pub fn center(self: &Arc<Self>) -> (Arc<FiniteGroup>, GroupMap) {
        let name = format!("Z({})", self.name);
        self.subgroup(&name, &self.central_ids())
            .expect("the center is always a valid subgroup")
    }

    /// Direct product with componentwise multiplication; pairs are ordered
    /// `(a, b) ↦ a·|other| + b`.
    pub fn direct_product(
        self: &Arc<Self>,
        other: &Arc<FiniteGroup>,
        name: &str,
        cap: usize,
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        let (n, m) = (self.order(), other.order());
        if n * m > cap {
            return Err(GroupError::CapExceeded { cap });
        }
        let size = n * m;
        let mut carrier = Vec::with_capacity(size);
        let mut labels = Vec::with_capacity(size);
        for a in 0..n {
            for b in 0..m {
                carrier.push(Element::pair(
                    self.carrier[a].clone(),
                    other.carrier[b].clone(),
                ));
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        let mut table = vec![0 as ElementId; size * size];
        for a1 in 0..n {
            for b1 in 0..m {
                let x = a1 * m + b1;
                for a2 in 0..n {
                    for b2 in 0..m {
                        let y = a2 * m + b2;
                        table[x * size + y] = self.mul(a1, a2) * m + other.mul(b1, b2);
                    }
                }
            }
        }
        let mut generators = Vec::new();
        for &g in self.generators() {
            let id = g * m + other.identity();
            if !generators.contains(&id) {
                generators.push(id);
            }
        }
        for &h in other.generators() {
            let id = self.identity() * m + h;
            if !generators.contains(&id) {
                generators.push(id);
            }
        }
        Ok(Arc::new(FiniteGroup::assemble(
            name, carrier, labels, table, generators,
        )?))
    }

    /// Quotient by a normal subgroup given as a set of element ids.
    ///
    /// Checks that the set is a subgroup and normal (`g·n·g⁻¹` stays
    /// inside for every `g`). Coset representatives are the least element
    /// id of each coset, and cosets are ordered by representative.
    /// Returns the quotient and the canonical projection.
    pub fn quotient(
        self: &Arc<Self>,
        normal: &[ElementId],
        name: &str,
    ) -> Result<(Arc<FiniteGroup>, GroupMap), GroupError> {
        let n = self.order();
        if let Some(&bad) = normal.iter().find(|&&s| s >= n) {
            return Err(GroupError::BadElementId { id: bad, order: n });
        }
        let members: BTreeSet<ElementId> = normal.iter().copied().collect();
        if !members.contains(&self.identity) {
            return Err(GroupError::NotNormal(
                "subgroup must contain the identity".into(),
            ));
        }
        for &a in &members {
            for &b in &members {
                if !members.contains(&self.mul(a, b)) {
                    return Err(GroupError::NotNormal(format!(
                        "set is not closed: {}·{} falls outside",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
            if !members.contains(&self.inverse(a)) {
                return Err(GroupError::NotNormal(format!(
                    "set is not closed under inverses at {}",
                    self.labels[a]
                )));
            }
        }
        for g in 0..n {
            for &m in &members {
                let conj = self.mul(self.mul(g, m), self.inverse(g));
                if !members.contains(&conj) {
                    return Err(GroupError::NotNormal(format!(
                        "{}·{}·{}⁻¹ = {} leaves the subgroup",
                        self.labels[g], self.labels[m], self.labels[g], self.labels[conj]
                    )));
                }
            }
        }

        // Coset of x is x·N; canonical representative is its least id.
        let rep_of: Vec<ElementId> = (0..n)
            .map(|x| members.iter().map(|&m| self.mul(x, m)).min().unwrap())
            .collect();
        let mut reps: Vec<ElementId> = rep_of
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        reps.sort_unstable();
        let coset_index = |x: ElementId| reps.binary_search(&rep_of[x]).unwrap();

        let k = reps.len();
        let mut table = vec![0 as ElementId; k * k];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                table[i * k + j] = coset_index(self.mul(ri, rj));
            }
        }
        let carrier: Vec<Element> = reps
            .iter()
            .map(|&r| Element::Coset(Box::new(self.carrier[r].clone())))
            .collect();
        let labels: Vec<String> = reps
            .iter()
            .map(|&r| format!("[{}]", self.labels[r]))
            .collect();
        let mut generators: Vec<ElementId> = Vec::new();
        for &g in self.generators() {
            let c = coset_index(g);
            if !generators.contains(&c) {
                generators.push(c);
            }
        }
        let quot = Arc::new(FiniteGroup::assemble(
            name, carrier, labels, table, generators,
        )?);
        let projection = GroupMap::new(
            &format!("proj {name}"),
            self,
            &quot,
            (0..n).map(&coset_index).collect(),
        )?;
        Ok((quot, projection))
    }

    /// Render the full multiplication table with element labels.
    pub fn cayley_table(&self) -> CayleyTable {
        let n = self.order();
        let headers = self.labels.clone();
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.labels[self.mul(a, b)].clone())
                    .collect()
            })
            .collect();
        CayleyTable {
            name: self.name.clone(),
            headers,
            rows,
        }
    }
}
