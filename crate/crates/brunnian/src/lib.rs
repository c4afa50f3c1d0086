//! Exact-arithmetic toolkit for finite integral connectivity structures and
//! the dependency structure of finite families of random variables.
//!
//! The two sides of the crate mirror each other:
//!
//! - **Structures** ([`ConnectivityStructure`]): families of subsets of
//!   `{1, …, n}` closed under overlapping unions, with generation, the Γ
//!   characterization by dissociation contestation, irreducible members,
//!   connected components, restriction, and the sum `⊕`.
//! - **Random families** ([`RandomFamily`]): finite probability spaces with
//!   exact rational masses plus one discrete variable per index. A family
//!   *respects* a dissociation when the joint law on its domain factors
//!   exactly through the two blocks; the subsets contesting all of their
//!   dissociations form the family's connectivity structure.
//!
//! [`realize`] maps any structure back to a family with exactly that
//! connectivity structure by tensoring one parity family per irreducible
//! member, [`minimize_family`] searches for smaller realizations, and
//! [`StructureCatalog`] enumerates every structure on small ground sets so
//! the whole round trip can be verified exhaustively. All probability
//! arithmetic is exact; there is no floating point anywhere.

pub mod catalog;
pub mod construct;
pub mod dissociation;
pub mod family;
pub mod rng;
pub mod search;
pub mod structure;
pub mod subset;
pub mod text;

pub use catalog::{
    oracle_connectivity_structure, verify_roundtrip, verify_structures, CatalogError,
    RoundtripEntry, RoundtripReport, StructureCatalog,
};
pub use construct::{brunnian_family, discrete_family, realize, wedge};
pub use dissociation::{contests, family_contests, Dissociation, DissociationError};
pub use family::{
    FamilyError, JointDistribution, ProbabilitySpace, RandomFamily, RandomVariable, Rational,
};
pub use rng::{sample_distinct, Lcg64};
pub use search::{minimize_family, ProbabilityModel, SearchBudget, SearchError};
pub use structure::{ComponentPartition, ConnectivityStructure, StructureError};
pub use subset::{GroundSet, Subset, SubsetError};
pub use text::{read_family, read_structure, write_family, write_structure, TextError};
