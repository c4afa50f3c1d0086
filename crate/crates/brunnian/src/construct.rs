//! Canonical constructions: the discrete family, parity families, and the
//! realization of an arbitrary integral structure as a random family.
//!
//! The realization tensors one parity family per irreducible connected set;
//! its connectivity structure is exactly the given structure, with universe
//! size `2^Σ(|K|-1)` over the irreducibles `K`.

use crate::family::{FamilyError, ProbabilitySpace, RandomFamily, RandomVariable};
use crate::structure::ConnectivityStructure;
use crate::subset::{GroundSet, Subset};

/// The constant family: a one-point universe, every variable 0. Its
/// connectivity structure is discrete.
pub fn discrete_family(ground: GroundSet) -> RandomFamily {
    let space = ProbabilitySpace::uniform(1);
    let variables = vec![RandomVariable::from_raw(vec![0]); ground.n()];
    RandomFamily::new(ground, space, variables).expect("well-formed by construction")
}

/// The canonical parity family on `m_set = {i_1 < … < i_m}`: uniform bits
/// on `2^(m-1)` outcomes, the first `m-1` indexed variables being the
/// coordinate projections, the last the mod-2 sum of all coordinates, and
/// every variable outside `m_set` constant 0.
///
/// Its only connected set beyond the trivial ones is `m_set` itself.
pub fn brunnian_family(ground: GroundSet, m_set: Subset) -> Result<RandomFamily, FamilyError> {
    if !ground.contains(m_set) {
        return Err(FamilyError::OutOfRange(m_set, ground.n()));
    }
    let m = m_set.cardinality();
    if m < 2 {
        return Err(FamilyError::TooSmall(m));
    }
    let elems: Vec<usize> = m_set.elems().collect();
    let size = 1usize << (m - 1);
    let mut columns = vec![vec![0u64; size]; ground.n()];
    for (k, &e) in elems[..m - 1].iter().enumerate() {
        for (w, cell) in columns[e - 1].iter_mut().enumerate() {
            *cell = (w >> k & 1) as u64;
        }
    }
    // The last indexed variable is the mod-2 sum of the coordinates, i.e.
    // the parity of the outcome's bits.
    for (w, cell) in columns[elems[m - 1] - 1].iter_mut().enumerate() {
        *cell = (w.count_ones() & 1) as u64;
    }
    let variables = columns.into_iter().map(RandomVariable::from_raw).collect();
    RandomFamily::new(ground, ProbabilitySpace::uniform(size), variables)
}

/// A random family whose connectivity structure is exactly `k`: the
/// left-fold tensor product of the parity families of `k`'s irreducibles,
/// taken in increasing bitmask order, or the discrete family when there
/// are none.
pub fn realize(k: &ConnectivityStructure) -> RandomFamily {
    let ground = k.ground();
    let mut irreducibles = k.irreducibles();
    irreducibles.sort_by_key(|s| s.bits());
    let mut acc: Option<RandomFamily> = None;
    for m_set in irreducibles {
        let factor = brunnian_family(ground, m_set).expect("irreducibles have ≥ 2 elements");
        acc = Some(match acc {
            None => factor,
            Some(f) => f.tensor(&factor).expect("same ground"),
        });
    }
    acc.unwrap_or_else(|| discrete_family(ground))
}

/// A family realizing the intersection of the two connectivity structures.
pub fn wedge(phi: &RandomFamily, psi: &RandomFamily) -> Result<RandomFamily, FamilyError> {
    if phi.ground() != psi.ground() {
        return Err(FamilyError::GroundMismatch(phi.ground().n(), psi.ground().n()));
    }
    let meet = phi
        .connectivity_structure()
        .intersect(&psi.connectivity_structure())
        .expect("same ground");
    Ok(realize(&meet))
}
