//! Integral connectivity structures on a finite ground set.
//!
//! A connectivity structure is a family of subsets (the "connected" sets)
//! closed under union of overlapping members; integral means the empty set
//! and every singleton are connected. Equality is plain list comparison
//! because members are kept sorted canonically (cardinality, then bitmask).

use std::fmt;

use thiserror::Error;

use crate::dissociation::{family_contests, Dissociation};
use crate::subset::{GroundSet, Subset};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("subset {0} is outside the ground set of size {1}")]
    OutOfRange(Subset, usize),
    #[error("not closed: {0} and {1} overlap but their union {2} is missing")]
    NotClosed(Subset, Subset, Subset),
    #[error("ground sets differ: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("dissociation {0} is not global on a ground set of size {1}")]
    NotGlobal(Dissociation, usize),
}

/// An integral connectivity structure: sorted, duplicate-free member list
/// always containing the empty set and all singletons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConnectivityStructure {
    ground: GroundSet,
    members: Vec<Subset>,
}

impl ConnectivityStructure {
    /// Validates that `sets` (plus the empty set and singletons) is closed
    /// under overlapping unions. Validation only; nothing is added beyond
    /// the trivial members.
    pub fn validate(ground: GroundSet, sets: &[Subset]) -> Result<Self, StructureError> {
        let members = Self::assemble(ground, sets.iter().copied())?;
        if let Some((a, b)) = first_closure_violation(&members) {
            return Err(StructureError::NotClosed(a, b, a.union(b)));
        }
        Ok(ConnectivityStructure { ground, members })
    }

    /// The structure generated by `generators`: the smallest integral
    /// structure containing them, computed as a fixed-point closure.
    pub fn generate(ground: GroundSet, generators: &[Subset]) -> Result<Self, StructureError> {
        let mut members = Self::assemble(ground, generators.iter().copied())?;
        // Saturate overlapping unions with a worklist.
        let mut present = vec![false; 1 << ground.n()];
        for m in &members {
            present[m.bits() as usize] = true;
        }
        let mut work: Vec<Subset> = members.clone();
        while let Some(a) = work.pop() {
            let mut added = Vec::new();
            for &b in &members {
                if a.overlaps(b) {
                    let u = a.union(b);
                    if !present[u.bits() as usize] {
                        present[u.bits() as usize] = true;
                        added.push(u);
                    }
                }
            }
            for u in added {
                members.push(u);
                work.push(u);
            }
        }
        members.sort();
        debug_assert!(first_closure_violation(&members).is_none());
        Ok(ConnectivityStructure { ground, members })
    }

    /// The Γ operator: all subsets whose every dissociation is contested by
    /// some member of `family`. Always an integral structure, and equal to
    /// `generate(ground, family)` — the two serve as each other's oracle.
    pub fn gamma(ground: GroundSet, family: &[Subset]) -> Result<Self, StructureError> {
        for &s in family {
            if !ground.contains(s) {
                return Err(StructureError::OutOfRange(s, ground.n()));
            }
        }
        let mut members = Vec::new();
        for b in ground.subsets() {
            let all_contested = Dissociation::enumerate(b)
                .iter()
                .all(|sigma| family_contests(family.iter(), sigma));
            if all_contested {
                members.push(b);
            }
        }
        members.sort();
        debug_assert!(first_closure_violation(&members).is_none());
        Ok(ConnectivityStructure { ground, members })
    }

    /// The discrete structure: only the empty set and singletons.
    pub fn discrete(ground: GroundSet) -> Self {
        Self::generate(ground, &[]).expect("no generators")
    }

    /// The gross structure: every subset is connected.
    pub fn gross(ground: GroundSet) -> Self {
        let members = ground.subsets_by_cardinality();
        ConnectivityStructure { ground, members }
    }

    /// Internal constructor for member lists known to be closed (fixed
    /// points of `generate`, theorem-backed outputs). Sorts and dedups;
    /// closure is only debug-asserted.
    pub(crate) fn from_closed_members(ground: GroundSet, mut members: Vec<Subset>) -> Self {
        for s in ground.singletons() {
            members.push(s);
        }
        members.push(Subset::EMPTY);
        members.sort();
        members.dedup();
        debug_assert!(first_closure_violation(&members).is_none());
        ConnectivityStructure { ground, members }
    }

    fn assemble(
        ground: GroundSet,
        sets: impl Iterator<Item = Subset>,
    ) -> Result<Vec<Subset>, StructureError> {
        let mut members = vec![Subset::EMPTY];
        members.extend(ground.singletons());
        for s in sets {
            if !ground.contains(s) {
                return Err(StructureError::OutOfRange(s, ground.n()));
            }
            members.push(s);
        }
        members.sort();
        members.dedup();
        Ok(members)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// All members in canonical order.
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    /// Members of cardinality at least 2, in canonical order.
    pub fn nontrivial_members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied().filter(|m| m.cardinality() >= 2)
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn is_discrete(&self) -> bool {
        self.members.len() == self.ground.n() + 1
    }

    pub fn is_gross(&self) -> bool {
        self.members.len() == 1 << self.ground.n()
    }

    /// The induced structure on `j`, kept on the same ground set: members
    /// included in `j`, plus the empty set and all singletons of `I`.
    pub fn restrict(&self, j: Subset) -> ConnectivityStructure {
        let kept: Vec<Subset> = self
            .members
            .iter()
            .copied()
            .filter(|m| m.is_subset_of(j))
            .collect();
        Self::from_closed_members(self.ground, kept)
    }

    /// The irreducible connected sets: members of cardinality ≥ 2 not
    /// generated by the remaining members. They generate the structure.
    pub fn irreducibles(&self) -> Vec<Subset> {
        let mut irr = Vec::new();
        for (i, &k) in self.members.iter().enumerate() {
            if k.cardinality() < 2 {
                continue;
            }
            let others: Vec<Subset> = self
                .members
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &m)| m)
                .collect();
            let without = Self::generate(self.ground, &others).expect("members are in range");
            if !without.contains(k) {
                irr.push(k);
            }
        }
        irr
    }

    /// The sum (least upper bound): the structure generated by the union of
    /// the member lists.
    pub fn sum(&self, other: &ConnectivityStructure) -> Result<ConnectivityStructure, StructureError> {
        if self.ground != other.ground {
            return Err(StructureError::GroundMismatch(self.ground.n(), other.ground.n()));
        }
        let mut gens = self.members.clone();
        gens.extend_from_slice(&other.members);
        Self::generate(self.ground, &gens)
    }

    /// The member-wise intersection, which is again an integral structure.
    pub fn intersect(&self, other: &ConnectivityStructure) -> Result<ConnectivityStructure, StructureError> {
        if self.ground != other.ground {
            return Err(StructureError::GroundMismatch(self.ground.n(), other.ground.n()));
        }
        let kept: Vec<Subset> = self
            .members
            .iter()
            .copied()
            .filter(|m| other.contains(*m))
            .collect();
        Ok(Self::from_closed_members(self.ground, kept))
    }

    /// Does this structure contain every member of `other`?
    pub fn contains_all(&self, other: &ConnectivityStructure) -> bool {
        other.members.iter().all(|m| self.contains(*m))
    }

    /// The maximal members. For an integral structure they partition `I`.
    pub fn connected_components(&self) -> ComponentPartition {
        let mut comps: Vec<Subset> = self
            .members
            .iter()
            .copied()
            .filter(|&m| {
                !m.is_empty()
                    && !self
                        .members
                        .iter()
                        .any(|&b| b != m && m.is_subset_of(b))
            })
            .collect();
        comps.sort_by_key(|c| c.min_elem());
        debug_assert_eq!(
            comps.iter().fold(0u32, |acc, c| acc | c.bits()),
            self.ground.full().bits()
        );
        ComponentPartition { ground: self.ground, components: comps }
    }
}

impl fmt::Debug for ConnectivityStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConnectivityStructure(n={}, ", self.ground.n())?;
        f.debug_set().entries(self.members.iter()).finish()?;
        write!(f, ")")
    }
}

/// The connected components of a structure: pairwise-disjoint maximal
/// members covering `I`, sorted by smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    ground: GroundSet,
    components: Vec<Subset>,
}

impl ComponentPartition {
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn components(&self) -> &[Subset] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Is the global dissociation `sigma` adapted to these components,
    /// i.e. does every component sit inside one block?
    pub fn is_adapted(&self, sigma: &Dissociation) -> Result<bool, StructureError> {
        if sigma.domain() != self.ground.full() {
            return Err(StructureError::NotGlobal(*sigma, self.ground.n()));
        }
        Ok(self.components.iter().all(|c| {
            c.is_subset_of(sigma.block1()) || c.is_subset_of(sigma.block2())
        }))
    }
}

/// First pair of overlapping members whose union is missing, scanning in
/// canonical order. `None` means the family is closed.
fn first_closure_violation(members: &[Subset]) -> Option<(Subset, Subset)> {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if a.overlaps(b) {
                let u = a.union(b);
                if members.binary_search(&u).is_err() {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(elems: &[usize]) -> Subset {
        Subset::from_elems(elems).unwrap()
    }

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    #[test]
    fn validate_accepts_discrete() {
        let k = ConnectivityStructure::validate(
            g(2),
            &[Subset::EMPTY, sub(&[1]), sub(&[2])],
        )
        .unwrap();
        assert!(k.is_discrete());
    }

    #[test]
    fn validate_rejects_open_family() {
        let err = ConnectivityStructure::validate(
            g(3),
            &[sub(&[1, 2]), sub(&[2, 3])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            StructureError::NotClosed(sub(&[1, 2]), sub(&[2, 3]), sub(&[1, 2, 3]))
        );
    }

    #[test]
    fn validate_accepts_closed_family() {
        let k = ConnectivityStructure::validate(
            g(3),
            &[sub(&[1, 2]), sub(&[2, 3]), sub(&[1, 2, 3])],
        )
        .unwrap();
        assert_eq!(k.members().len(), 7);
    }

    #[test]
    fn validate_rejects_out_of_range() {
        let err = ConnectivityStructure::validate(g(2), &[sub(&[1, 3])]).unwrap_err();
        assert_eq!(err, StructureError::OutOfRange(sub(&[1, 3]), 2));
    }

    #[test]
    fn generate_examples() {
        assert!(ConnectivityStructure::generate(g(3), &[]).unwrap().is_discrete());

        let k = ConnectivityStructure::generate(g(3), &[sub(&[1, 2]), sub(&[2, 3])]).unwrap();
        assert!(k.contains(sub(&[1, 2, 3])));
        assert_eq!(k.members().len(), 7);

        // Disjoint generators stay put: the closure adds nothing.
        let k = ConnectivityStructure::generate(g(4), &[sub(&[1, 2]), sub(&[3, 4])]).unwrap();
        assert_eq!(
            k.nontrivial_members().collect::<Vec<_>>(),
            vec![sub(&[1, 2]), sub(&[3, 4])]
        );
    }

    #[test]
    fn gamma_examples() {
        let fam = [sub(&[1, 2]), sub(&[2, 3])];
        assert_eq!(
            ConnectivityStructure::gamma(g(3), &fam).unwrap(),
            ConnectivityStructure::generate(g(3), &fam).unwrap()
        );
        assert!(ConnectivityStructure::gamma(g(2), &[]).unwrap().is_discrete());
        let k = ConnectivityStructure::gamma(g(4), &[sub(&[1, 2, 3, 4])]).unwrap();
        assert_eq!(
            k.nontrivial_members().collect::<Vec<_>>(),
            vec![sub(&[1, 2, 3, 4])]
        );
    }

    #[test]
    fn restrict_keeps_ground() {
        let k = ConnectivityStructure::gross(g(3)).restrict(sub(&[1, 2]));
        assert_eq!(k.ground().n(), 3);
        let within: Vec<Subset> = k
            .members()
            .iter()
            .copied()
            .filter(|m| m.is_subset_of(sub(&[1, 2])))
            .collect();
        assert_eq!(within, vec![Subset::EMPTY, sub(&[1]), sub(&[2]), sub(&[1, 2])]);
        // Restricting to I is the identity.
        let k = ConnectivityStructure::generate(g(3), &[sub(&[1, 2])]).unwrap();
        assert_eq!(k.restrict(g(3).full()), k);
        // Membership filter drops everything not inside {1,3}.
        let k = ConnectivityStructure::generate(g(3), &[sub(&[1, 2]), sub(&[2, 3])]).unwrap();
        let r = k.restrict(sub(&[1, 3]));
        assert!(r.is_discrete());
    }

    #[test]
    fn irreducibles_examples() {
        let gross = ConnectivityStructure::gross(g(3));
        assert_eq!(
            gross.irreducibles(),
            vec![sub(&[1, 2]), sub(&[1, 3]), sub(&[2, 3])]
        );
        assert!(ConnectivityStructure::discrete(g(3)).irreducibles().is_empty());
        let k = ConnectivityStructure::generate(g(3), &[sub(&[1, 2, 3])]).unwrap();
        assert_eq!(k.irreducibles(), vec![sub(&[1, 2, 3])]);
    }

    #[test]
    fn sum_examples() {
        let k = ConnectivityStructure::generate(g(3), &[sub(&[1, 2])]).unwrap();
        let d = ConnectivityStructure::discrete(g(3));
        let gr = ConnectivityStructure::gross(g(3));
        assert_eq!(k.sum(&d).unwrap(), k);
        assert_eq!(k.sum(&gr).unwrap(), gr);
        let k2 = ConnectivityStructure::generate(g(3), &[sub(&[2, 3])]).unwrap();
        assert_eq!(
            k.sum(&k2).unwrap(),
            ConnectivityStructure::generate(g(3), &[sub(&[1, 2]), sub(&[2, 3])]).unwrap()
        );
        let other = ConnectivityStructure::discrete(g(2));
        assert!(matches!(k.sum(&other), Err(StructureError::GroundMismatch(3, 2))));
    }

    #[test]
    fn components_examples() {
        let d = ConnectivityStructure::discrete(g(3));
        assert_eq!(
            d.connected_components().components(),
            &[sub(&[1]), sub(&[2]), sub(&[3])]
        );
        let gr = ConnectivityStructure::gross(g(3));
        assert_eq!(gr.connected_components().components(), &[sub(&[1, 2, 3])]);
        let k = ConnectivityStructure::generate(g(4), &[sub(&[1, 2])]).unwrap();
        assert_eq!(
            k.connected_components().components(),
            &[sub(&[1, 2]), sub(&[3]), sub(&[4])]
        );
    }

    #[test]
    fn adapted_examples() {
        let k = ConnectivityStructure::generate(g(3), &[sub(&[1, 2])]).unwrap();
        let parts = k.connected_components();
        let s = Dissociation::new(sub(&[1, 2]), sub(&[3])).unwrap();
        assert!(parts.is_adapted(&s).unwrap());
        let t = Dissociation::new(sub(&[1, 3]), sub(&[2])).unwrap();
        assert!(!parts.is_adapted(&t).unwrap());
        let local = Dissociation::new(sub(&[1]), sub(&[2])).unwrap();
        assert!(matches!(
            parts.is_adapted(&local),
            Err(StructureError::NotGlobal(_, 3))
        ));
        // Every global dissociation is adapted to singleton components.
        let d = ConnectivityStructure::discrete(g(3));
        let parts = d.connected_components();
        for sigma in Dissociation::enumerate(g(3).full()) {
            assert!(parts.is_adapted(&sigma).unwrap());
        }
    }

    #[test]
    fn intersect_is_structure() {
        let a = ConnectivityStructure::generate(g(3), &[sub(&[1, 2, 3])]).unwrap();
        let b = ConnectivityStructure::generate(g(3), &[sub(&[1, 2])]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert!(i.is_discrete());
    }
}
