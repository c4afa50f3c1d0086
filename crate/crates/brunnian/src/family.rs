//! Finite families of discrete random variables with exact probabilities.
//!
//! A family couples a finite probability space with one variable per ground
//! element. Whether a dissociation is respected is an exact equality of
//! rationals — the joint law on the domain must factor through the two
//! blocks for every value tuple — so no floating point appears anywhere.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::dissociation::Dissociation;
use crate::structure::ConnectivityStructure;
use crate::subset::{GroundSet, Subset};

/// Exact arbitrary-precision fraction; always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq)]
pub enum FamilyError {
    #[error("probabilities sum to {0}, expected exactly 1")]
    ProbSumNotOne(Rational),
    #[error("negative probability {0} at outcome {1}")]
    NegativeProbability(Rational, usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("cannot restrict a family to the empty subset")]
    EmptySubset,
    #[error("ground sets differ: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("a brunnian index set needs at least 2 elements, got {0}")]
    TooSmall(usize),
    #[error("subset {0} is outside the ground set of size {1}")]
    OutOfRange(Subset, usize),
}

/// A finite probability space: outcomes `0..m-1` with exact rational
/// probabilities that are non-negative and sum to exactly 1.
///
/// Zero-probability outcomes are legal and preserved verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilitySpace {
    probs: Vec<Rational>,
}

impl ProbabilitySpace {
    pub fn new(probs: Vec<Rational>) -> Result<Self, FamilyError> {
        for (w, p) in probs.iter().enumerate() {
            if p.is_negative() {
                return Err(FamilyError::NegativeProbability(p.clone(), w));
            }
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(FamilyError::ProbSumNotOne(total));
        }
        Ok(ProbabilitySpace { probs })
    }

    /// The uniform space on `m` outcomes.
    pub fn uniform(m: usize) -> Self {
        assert!(m > 0);
        let p = Rational::new(1.into(), (m as u64).into());
        ProbabilitySpace { probs: vec![p; m] }
    }

    pub(crate) fn from_normalized(probs: Vec<Rational>) -> Self {
        debug_assert!(probs.iter().sum::<Rational>().is_one());
        ProbabilitySpace { probs }
    }

    pub fn size(&self) -> usize {
        self.probs.len()
    }

    pub fn prob(&self, outcome: usize) -> &Rational {
        &self.probs[outcome]
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }
}

/// One discrete random variable: a value code per outcome.
///
/// Codes are normalized to be dense — the appearing codes are exactly
/// `0..k` — by an order-preserving relabeling at construction. The
/// connectivity structure of a family is invariant under any injective
/// relabeling, so nothing is lost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomVariable {
    values: Vec<u64>,
}

impl RandomVariable {
    /// Normalizes arbitrary non-negative codes to dense ones.
    pub fn from_raw(raw: Vec<u64>) -> Self {
        let mut distinct: Vec<u64> = raw.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let values = raw
            .iter()
            .map(|v| distinct.binary_search(v).expect("code present") as u64)
            .collect();
        RandomVariable { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Number of distinct values; equals `max + 1` because codes are dense.
    pub fn range_size(&self) -> u64 {
        self.values.iter().copied().max().map_or(0, |m| m + 1)
    }
}

/// A family of `n` random variables over a shared probability space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomFamily {
    ground: GroundSet,
    space: ProbabilitySpace,
    variables: Vec<RandomVariable>,
}

impl RandomFamily {
    /// Checks the invariants (one variable per ground element, one value per
    /// outcome) and returns the canonical family.
    pub fn new(
        ground: GroundSet,
        space: ProbabilitySpace,
        variables: Vec<RandomVariable>,
    ) -> Result<Self, FamilyError> {
        if variables.len() != ground.n() {
            return Err(FamilyError::LengthMismatch {
                expected: ground.n(),
                got: variables.len(),
            });
        }
        for v in &variables {
            if v.values().len() != space.size() {
                return Err(FamilyError::LengthMismatch {
                    expected: space.size(),
                    got: v.values().len(),
                });
            }
        }
        Ok(RandomFamily { ground, space, variables })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn space(&self) -> &ProbabilitySpace {
        &self.space
    }

    pub fn universe_size(&self) -> usize {
        self.space.size()
    }

    pub fn variables(&self) -> &[RandomVariable] {
        &self.variables
    }

    /// The variable indexed by ground element `i` (1-based).
    pub fn variable(&self, i: usize) -> &RandomVariable {
        &self.variables[i - 1]
    }

    /// The joint law of the variables indexed by `j`: one pass over the
    /// outcomes, accumulating mass per observed value tuple. The empty
    /// subset yields the single empty tuple with mass 1.
    pub fn joint_distribution(&self, j: Subset) -> JointDistribution {
        assert!(self.ground.contains(j), "subset {j} outside ground set");
        let idx: Vec<usize> = j.elems().map(|e| e - 1).collect();
        let mut table: HashMap<Vec<u64>, Rational> = HashMap::new();
        for (w, p) in self.space.probs().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let key: Vec<u64> = idx.iter().map(|&i| self.variables[i].values()[w]).collect();
            match table.get_mut(&key) {
                Some(acc) => *acc += p,
                None => {
                    table.insert(key, p.clone());
                }
            }
        }
        JointDistribution { domain: j, table }
    }

    /// Does this family respect `sigma`: is the joint law on the domain
    /// exactly the product of the two block marginals for every value
    /// tuple (tuples absent from all tables counting as probability 0)?
    pub fn respects(&self, sigma: &Dissociation) -> bool {
        assert!(
            self.ground.contains(sigma.domain()),
            "dissociation domain {} outside ground set",
            sigma.domain()
        );
        let joint = self.joint_distribution(sigma.domain());
        let m1 = self.joint_distribution(sigma.block1());
        let m2 = self.joint_distribution(sigma.block2());
        tables_factorize(&joint, &m1, &m2)
    }

    /// The connectivity structure of the family: all subsets whose every
    /// dissociation is contested (not respected).
    ///
    /// Marginal tables are computed once per subset and shared across all
    /// the dissociation checks that need them; subsets are visited in
    /// increasing cardinality.
    pub fn connectivity_structure(&self) -> ConnectivityStructure {
        let n = self.ground.n();
        let mut tables: Vec<Option<JointDistribution>> = Vec::with_capacity(1 << n);
        tables.resize_with(1 << n, || None);
        for j in self.ground.subsets_by_cardinality() {
            tables[j.bits() as usize] = Some(self.joint_distribution(j));
        }
        let table = |s: Subset| tables[s.bits() as usize].as_ref().expect("memoized");

        let mut members = Vec::new();
        for j in self.ground.subsets_by_cardinality() {
            let connected = Dissociation::enumerate(j)
                .iter()
                .all(|sigma| !tables_factorize(table(j), table(sigma.block1()), table(sigma.block2())));
            if connected {
                members.push(j);
            }
        }
        ConnectivityStructure::from_closed_members(self.ground, members)
    }

    /// The family restricted to `j`: same probability space, variables
    /// re-indexed to `{1, …, |j|}` by the order-preserving relabeling.
    pub fn restrict(&self, j: Subset) -> Result<RandomFamily, FamilyError> {
        if j.is_empty() {
            return Err(FamilyError::EmptySubset);
        }
        if !self.ground.contains(j) {
            return Err(FamilyError::OutOfRange(j, self.ground.n()));
        }
        let variables: Vec<RandomVariable> =
            j.elems().map(|e| self.variables[e - 1].clone()).collect();
        let ground = GroundSet::new(j.cardinality()).expect("1..=16");
        Ok(RandomFamily { ground, space: self.space.clone(), variables })
    }

    /// The tensor product: outcomes are pairs `(w, x)` in row-major order
    /// with product probabilities, and variable `i` pairs the factor values
    /// via arithmetic coding followed by dense renormalization.
    pub fn tensor(&self, other: &RandomFamily) -> Result<RandomFamily, FamilyError> {
        if self.ground != other.ground {
            return Err(FamilyError::GroundMismatch(self.ground.n(), other.ground.n()));
        }
        let (ma, mb) = (self.space.size(), other.space.size());
        let mut probs = Vec::with_capacity(ma * mb);
        for pa in self.space.probs() {
            for pb in other.space.probs() {
                probs.push(pa * pb);
            }
        }
        let mut variables = Vec::with_capacity(self.ground.n());
        for i in 0..self.ground.n() {
            let k = other.variables[i].range_size();
            let mut raw = Vec::with_capacity(ma * mb);
            for w in 0..ma {
                let va = self.variables[i].values()[w];
                for x in 0..mb {
                    raw.push(va * k + other.variables[i].values()[x]);
                }
            }
            variables.push(RandomVariable::from_raw(raw));
        }
        Ok(RandomFamily {
            ground: self.ground,
            space: ProbabilitySpace::from_normalized(probs),
            variables,
        })
    }

    /// Verifies that the joint law over `I` is the product of the joint
    /// laws over the connected components of the family's connectivity
    /// structure. Always true by theorem; exposed as a runtime check.
    pub fn check_component_independence(&self) -> bool {
        let comps = self.connectivity_structure().connected_components();
        let full = self.ground.full();
        let joint = self.joint_distribution(full);
        let marginals: Vec<JointDistribution> = comps
            .components()
            .iter()
            .map(|&c| self.joint_distribution(c))
            .collect();

        let product_size: usize = marginals.iter().map(|m| m.len()).product();
        if joint.len() != product_size {
            return false;
        }
        let positions: Vec<Vec<usize>> = comps
            .components()
            .iter()
            .map(|c| c.elems().map(|e| e - 1).collect())
            .collect();
        for (key, p) in joint.iter() {
            let mut product = Rational::one();
            for (marginal, pos) in marginals.iter().zip(&positions) {
                let sub: Vec<u64> = pos.iter().map(|&i| key[i]).collect();
                match marginal.get(&sub) {
                    Some(q) => product *= q,
                    None => return false,
                }
            }
            if *p != product {
                return false;
            }
        }
        true
    }
}

/// The joint law of a variable tuple: positive masses per value tuple,
/// zero entries omitted, summing to exactly 1.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDistribution {
    domain: Subset,
    table: HashMap<Vec<u64>, Rational>,
}

impl JointDistribution {
    pub fn domain(&self) -> Subset {
        self.domain
    }

    /// Number of value tuples with positive mass.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, key: &[u64]) -> Option<&Rational> {
        self.table.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u64>, &Rational)> {
        self.table.iter()
    }

    pub fn total(&self) -> Rational {
        self.table.values().sum()
    }
}

/// Does `joint` factor exactly as `m1 ⊗ m2`?
///
/// Checks every positive joint entry against the product of its block
/// marginals, plus the support-cardinality equality
/// `|supp(joint)| = |supp(m1)| · |supp(m2)|`. Together these decide the
/// full quantification over all value tuples: tuples outside both supports
/// have both sides zero, and a strict support inclusion is exactly a tuple
/// where the joint is zero but both marginals are positive.
pub(crate) fn tables_factorize(
    joint: &JointDistribution,
    m1: &JointDistribution,
    m2: &JointDistribution,
) -> bool {
    if joint.len() != m1.len() * m2.len() {
        return false;
    }
    let pos1 = positions_within(joint.domain, m1.domain);
    let pos2 = positions_within(joint.domain, m2.domain);
    let mut k1 = Vec::with_capacity(pos1.len());
    let mut k2 = Vec::with_capacity(pos2.len());
    for (key, p) in joint.iter() {
        k1.clear();
        k1.extend(pos1.iter().map(|&i| key[i]));
        k2.clear();
        k2.extend(pos2.iter().map(|&i| key[i]));
        let (a, b) = match (m1.get(&k1), m2.get(&k2)) {
            (Some(a), Some(b)) => (a, b),
            _ => return false,
        };
        if *p != a * b {
            return false;
        }
    }
    true
}

/// Index positions of `part`'s elements within `whole`'s element order.
pub(crate) fn positions_within(whole: Subset, part: Subset) -> Vec<usize> {
    let whole_elems: Vec<usize> = whole.elems().collect();
    part.elems()
        .map(|e| whole_elems.iter().position(|&w| w == e).expect("part within whole"))
        .collect()
}
