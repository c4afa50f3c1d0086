//! Exhaustive enumeration of integral structures on small ground sets and
//! the brute-force verification machinery built on top of it.
//!
//! Everything here is deliberately definition-literal so it can serve as an
//! independent oracle for the optimized paths elsewhere in the crate.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::construct::realize;
use crate::dissociation::Dissociation;
use crate::family::{positions_within, RandomFamily, Rational};
use crate::structure::ConnectivityStructure;
use crate::subset::{GroundSet, Subset};

/// Enumeration is exhaustive over all `2^(2^n - n - 1)` candidate set
/// families, which stops being a desk-scale notion beyond n = 5.
pub const MAX_ENUMERATION_GROUND: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("structure enumeration is supported for n ≤ {MAX_ENUMERATION_GROUND}, got {0}")]
    TooLarge(usize),
}

/// Every integral connectivity structure on a ground set, exactly once,
/// ordered by member count and then by the member list itself. The first
/// entry is the discrete structure and the last is the gross one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCatalog {
    ground: GroundSet,
    structures: Vec<ConnectivityStructure>,
}

impl StructureCatalog {
    /// Enumerates all integral structures on `ground`.
    ///
    /// Candidates of cardinality ≥ 2 are decided in increasing cardinality
    /// order; a candidate that is the overlapping union of two already
    /// chosen members is forced in, anything else branches both ways. This
    /// prunes exactly the families that would fail closure validation.
    pub fn enumerate(ground: GroundSet) -> Result<Self, CatalogError> {
        if ground.n() > MAX_ENUMERATION_GROUND {
            return Err(CatalogError::TooLarge(ground.n()));
        }
        let candidates: Vec<Subset> = ground
            .subsets_by_cardinality()
            .into_iter()
            .filter(|s| s.cardinality() >= 2)
            .collect();
        let index_of = |s: Subset| {
            candidates
                .binary_search(&s)
                .expect("candidate order is the canonical subset order")
        };
        // forcing[i] lists the pairs of earlier candidates whose overlapping
        // union is candidates[i]. A proper pair has both parts of size ≥ 2:
        // a singleton part would be contained in the other.
        let mut forcing: Vec<Vec<(usize, usize)>> = vec![Vec::new(); candidates.len()];
        for (i, &u) in candidates.iter().enumerate() {
            let subs: Vec<Subset> = u
                .subsets()
                .filter(|s| s.cardinality() >= 2 && *s != u)
                .collect();
            for (a_idx, &a) in subs.iter().enumerate() {
                for &b in &subs[a_idx + 1..] {
                    if a.union(b) == u && a.overlaps(b) {
                        forcing[i].push((index_of(a), index_of(b)));
                    }
                }
            }
        }

        let mut structures = Vec::new();
        let mut chosen = vec![false; candidates.len()];
        enumerate_rec(ground, &candidates, &forcing, &mut chosen, 0, &mut structures);
        structures.sort_by(|a, b| {
            (a.members().len(), a.members()).cmp(&(b.members().len(), b.members()))
        });
        Ok(StructureCatalog { ground, structures })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.structures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structures.is_empty()
    }

    pub fn structures(&self) -> &[ConnectivityStructure] {
        &self.structures
    }

    pub fn get(&self, index: usize) -> &ConnectivityStructure {
        &self.structures[index]
    }

    pub fn contains(&self, k: &ConnectivityStructure) -> bool {
        self.structures
            .binary_search_by(|probe| {
                (probe.members().len(), probe.members()).cmp(&(k.members().len(), k.members()))
            })
            .is_ok()
    }
}

fn enumerate_rec(
    ground: GroundSet,
    candidates: &[Subset],
    forcing: &[Vec<(usize, usize)>],
    chosen: &mut Vec<bool>,
    idx: usize,
    out: &mut Vec<ConnectivityStructure>,
) {
    if idx == candidates.len() {
        let members: Vec<Subset> = candidates
            .iter()
            .zip(chosen.iter())
            .filter(|&(_, &c)| c)
            .map(|(&s, _)| s)
            .collect();
        out.push(ConnectivityStructure::from_closed_members(ground, members));
        return;
    }
    let forced = forcing[idx].iter().any(|&(a, b)| chosen[a] && chosen[b]);
    if forced {
        chosen[idx] = true;
        enumerate_rec(ground, candidates, forcing, chosen, idx + 1, out);
        chosen[idx] = false;
    } else {
        enumerate_rec(ground, candidates, forcing, chosen, idx + 1, out);
        chosen[idx] = true;
        enumerate_rec(ground, candidates, forcing, chosen, idx + 1, out);
        chosen[idx] = false;
    }
}

/// Definition-literal connectivity structure of a family: every subset is
/// tested against every one of its dissociations, with all joint laws
/// recomputed from scratch each time — no memoization, no shortcuts.
pub fn oracle_connectivity_structure(phi: &RandomFamily) -> ConnectivityStructure {
    let ground = phi.ground();
    let mut members = Vec::new();
    for j in ground.subsets_by_cardinality() {
        let connected = Dissociation::enumerate(j)
            .iter()
            .all(|sigma| !oracle_respects(phi, sigma));
        if connected {
            members.push(j);
        }
    }
    ConnectivityStructure::from_closed_members(ground, members)
}

/// Factorization test by direct sweep of the product of the two marginal
/// supports, with missing joint entries read as 0. Tuples outside both
/// supports make both sides vanish, so this decides the quantification
/// over all value tuples. Distinct on purpose from the support-counting
/// check used by `RandomFamily::respects`.
fn oracle_respects(phi: &RandomFamily, sigma: &Dissociation) -> bool {
    let domain = sigma.domain();
    let joint = phi.joint_distribution(domain);
    let m1 = phi.joint_distribution(sigma.block1());
    let m2 = phi.joint_distribution(sigma.block2());
    let pos1 = positions_within(domain, sigma.block1());
    let pos2 = positions_within(domain, sigma.block2());
    let zero = Rational::zero();
    let mut key = vec![0u64; domain.cardinality()];
    for (k1, p1) in m1.iter() {
        for (k2, p2) in m2.iter() {
            for (slot, v) in pos1.iter().zip(k1) {
                key[*slot] = *v;
            }
            for (slot, v) in pos2.iter().zip(k2) {
                key[*slot] = *v;
            }
            let lhs = joint.get(&key).unwrap_or(&zero);
            if *lhs != p1 * p2 {
                return false;
            }
        }
    }
    true
}

/// One verified structure: how many members it has, how large the realized
/// universe is, and whether both κ paths reproduced it exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripEntry {
    pub member_count: usize,
    pub universe_size: usize,
    pub pass: bool,
}

/// Line-oriented round-trip report, one structure per line in catalog
/// order: member count, universe size, PASS or FAIL.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    entries: Vec<RoundtripEntry>,
}

impl RoundtripReport {
    pub fn entries(&self) -> &[RoundtripEntry] {
        &self.entries
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }
}

impl fmt::Display for RoundtripReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "{} {} {}",
                e.member_count,
                e.universe_size,
                if e.pass { "PASS" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Realizes each structure and recomputes its connectivity structure along
/// both the optimized and the oracle path, requiring exact triple equality.
/// Failures become report entries rather than panics.
pub fn verify_structures<'a, I>(structures: I) -> RoundtripReport
where
    I: IntoIterator<Item = &'a ConnectivityStructure>,
{
    let entries = structures
        .into_iter()
        .map(|k| {
            let phi = realize(k);
            let optimized = phi.connectivity_structure();
            let oracle = oracle_connectivity_structure(&phi);
            RoundtripEntry {
                member_count: k.members().len(),
                universe_size: phi.universe_size(),
                pass: optimized == *k && oracle == *k,
            }
        })
        .collect();
    RoundtripReport { entries }
}

/// Round-trip verification of an entire catalog.
pub fn verify_roundtrip(catalog: &StructureCatalog) -> RoundtripReport {
    verify_structures(catalog.structures())
}
