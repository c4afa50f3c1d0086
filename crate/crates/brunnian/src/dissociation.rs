//! Dissociations: unordered pairs of disjoint nonempty subsets.
//!
//! A dissociation splits its domain (the union of the two blocks) in two.
//! A set *contests* a dissociation when it lies inside the domain and meets
//! both blocks; otherwise it *respects* it.

use std::fmt;

use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DissociationError {
    #[error("dissociation blocks must be nonempty")]
    EmptyBlock,
    #[error("dissociation blocks {0} and {1} overlap")]
    BlocksOverlap(Subset, Subset),
    #[error("{0} does not contest {1}: a restriction would have an empty block")]
    NotOverlapping(Subset, Dissociation),
}

/// An unordered pair of disjoint nonempty subsets.
///
/// Stored canonically with the block containing the domain's smallest
/// element first, so equal dissociations compare equal structurally.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissociation {
    block1: Subset,
    block2: Subset,
}

impl Dissociation {
    pub fn new(a: Subset, b: Subset) -> Result<Self, DissociationError> {
        if a.is_empty() || b.is_empty() {
            return Err(DissociationError::EmptyBlock);
        }
        if a.overlaps(b) {
            return Err(DissociationError::BlocksOverlap(a, b));
        }
        // Canonical order: block holding the smallest element of the domain first.
        let min = a.union(b).min_elem().expect("domain nonempty");
        if a.contains_elem(min) {
            Ok(Dissociation { block1: a, block2: b })
        } else {
            Ok(Dissociation { block1: b, block2: a })
        }
    }

    pub fn block1(&self) -> Subset {
        self.block1
    }

    pub fn block2(&self) -> Subset {
        self.block2
    }

    /// The domain: the disjoint union of the two blocks.
    pub fn domain(&self) -> Subset {
        self.block1.union(self.block2)
    }

    /// The trace of this dissociation on `l`.
    ///
    /// Defined whenever `l` contests this dissociation; the blocks of the
    /// result are the intersections of `l` with the original blocks.
    pub fn restrict_to(&self, l: Subset) -> Result<Dissociation, DissociationError> {
        if !contests(l, self) {
            return Err(DissociationError::NotOverlapping(l, *self));
        }
        Dissociation::new(l.intersection(self.block1), l.intersection(self.block2))
    }

    /// All dissociations of `j`: the `2^(|j|-1) - 1` unordered two-block
    /// partitions, ordered by the bitmask of the block containing `j`'s
    /// smallest element. Empty for `|j| <= 1`.
    pub fn enumerate(j: Subset) -> Vec<Dissociation> {
        let mut out = Vec::new();
        let min = match j.min_elem() {
            Some(m) if j.cardinality() >= 2 => m,
            _ => return out,
        };
        let anchor = Subset::singleton(min);
        let rest = j.difference(anchor);
        // block1 = {min} ∪ s for every proper submask s of rest; submasks
        // come out in increasing bitmask order, hence so does block1.
        for s in rest.subsets() {
            if s == rest {
                continue;
            }
            let block1 = anchor.union(s);
            let block2 = j.difference(block1);
            out.push(Dissociation { block1, block2 });
        }
        out
    }
}

/// Does `a` contest `sigma`: `a ⊆ domain` and `a` meets both blocks?
pub fn contests(a: Subset, sigma: &Dissociation) -> bool {
    a.is_subset_of(sigma.domain()) && a.overlaps(sigma.block1()) && a.overlaps(sigma.block2())
}

/// Does some member of `family` contest `sigma`?
///
/// The negation is "the family respects `sigma`"; in particular the empty
/// family respects every dissociation.
pub fn family_contests<'a, F>(family: F, sigma: &Dissociation) -> bool
where
    F: IntoIterator<Item = &'a Subset>,
{
    family.into_iter().any(|a| contests(*a, sigma))
}

impl fmt::Display for Dissociation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.block1, self.block2)
    }
}

impl fmt::Debug for Dissociation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
