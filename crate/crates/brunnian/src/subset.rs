//! Ground sets and bitmask-encoded subsets.
//!
//! Every set-level object in this crate lives inside a fixed index set
//! `I = {1, …, n}` with `n ≤ 16`, so a subset is a `u32` bitmask where bit
//! `i − 1` stands for the element `i`.

use std::fmt;

use thiserror::Error;

/// The largest supported ground-set cardinality.
pub const MAX_GROUND: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubsetError {
    #[error("ground set size must be between 1 and {MAX_GROUND}, got {0}")]
    InvalidSize(usize),
    #[error("element {0} is outside the ground set {{1, …, {1}}}")]
    ElementOutOfRange(usize, usize),
}

/// The index set `I = {1, …, n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u8,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self, SubsetError> {
        if n == 0 || n > MAX_GROUND {
            return Err(SubsetError::InvalidSize(n));
        }
        Ok(GroundSet { n: n as u8 })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The full set `I` as a subset.
    pub fn full(&self) -> Subset {
        Subset::from_bits((1u32 << self.n) - 1)
    }

    pub fn contains(&self, s: Subset) -> bool {
        s.bits() < (1u32 << self.n)
    }

    /// All `2^n` subsets of the ground set, in increasing bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..(1u32 << self.n)).map(Subset::from_bits)
    }

    /// All subsets ordered canonically: by cardinality, then bitmask value.
    pub fn subsets_by_cardinality(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.subsets().collect();
        v.sort();
        v
    }

    /// The singletons `{1}, …, {n}`.
    pub fn singletons(&self) -> impl Iterator<Item = Subset> {
        (1..=self.n as usize).map(Subset::singleton)
    }
}

/// A subset of the ground set, encoded as a bitmask.
///
/// The ordering is the canonical one used throughout: cardinality first,
/// then bitmask value. This makes sorted member lists directly comparable.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u32,
}

impl Subset {
    pub const EMPTY: Subset = Subset { bits: 0 };

    /// Raw constructor; `bits` must fit the intended ground set.
    pub fn from_bits(bits: u32) -> Self {
        debug_assert!(bits < (1 << MAX_GROUND));
        Subset { bits }
    }

    /// The singleton `{i}` (1-based).
    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&i));
        Subset { bits: 1 << (i - 1) }
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elems(elems: &[usize]) -> Result<Self, SubsetError> {
        let mut bits = 0u32;
        for &e in elems {
            if e == 0 || e > MAX_GROUND {
                return Err(SubsetError::ElementOutOfRange(e, MAX_GROUND));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset { bits })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains_elem(&self, i: usize) -> bool {
        (1..=MAX_GROUND).contains(&i) && self.bits >> (i - 1) & 1 == 1
    }

    pub fn union(&self, other: Subset) -> Subset {
        Subset { bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: Subset) -> Subset {
        Subset { bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: Subset) -> Subset {
        Subset { bits: self.bits & !other.bits }
    }

    /// Complement within the given ground set.
    pub fn complement(&self, ground: GroundSet) -> Subset {
        Subset { bits: ground.full().bits & !self.bits }
    }

    pub fn is_subset_of(&self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn overlaps(&self, other: Subset) -> bool {
        self.bits & other.bits != 0
    }

    /// Smallest element (1-based), or `None` for the empty set.
    pub fn min_elem(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize + 1)
        }
    }

    /// Elements in increasing order, 1-based.
    pub fn elems(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=MAX_GROUND).filter(move |&i| self.contains_elem(i))
    }

    /// All subsets of `self`, including the empty set and `self` itself.
    pub fn subsets(&self) -> SubmaskIter {
        SubmaskIter { of: self.bits, cur: 0, done: false }
    }
}

/// Iterates the submasks of a mask in increasing bitmask order.
pub struct SubmaskIter {
    of: u32,
    cur: u32,
    done: bool,
}

impl Iterator for SubmaskIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let out = Subset::from_bits(self.cur);
        if self.cur == self.of {
            self.done = true;
        } else {
            // Standard submask step: fill below the lowest candidate bit.
            self.cur = (self.cur.wrapping_sub(self.of)) & self.of;
        }
        Some(out)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.cardinality(), self.bits).cmp(&(other.cardinality(), other.bits))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elems() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
