//! Structure and homological invariants of the groups of order `p⁵`.
//!
//! The crate builds each family from its power-commutator presentation,
//! computes `G'`, `Z(G)`, `G^ab` and the class by exact collection, and derives
//! `∇(G)`, `J₂(G)`, `G∧G` and `G⊗G` through the finite abelian calculus.
//! Everything is checked against the embedded summary tables.

pub mod abelian;
pub mod catalog;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod pc_engine;
pub mod verify;

pub use abelian::{AbelianType, IntegerMatrix};
pub use error::{Error, Result};
pub use catalog::{RowId, Tables};
pub use invariants::{InvariantRecord, TensorStructure};
pub use verify::{verify, VerifyOptions, VerifyReport};
pub use pc_engine::{Element, PcPresentation, Subgroup};

/// Relation matrices with arbitrary-precision entries.
pub type BigIntMatrix = IntegerMatrix<num_bigint::BigInt>;
/// Relation matrices for small oracle sweeps.
pub type SmallIntMatrix = IntegerMatrix<i64>;
