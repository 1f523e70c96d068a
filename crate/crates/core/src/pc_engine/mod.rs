//! Exact arithmetic in groups given by power-commutator presentations over a
//! prime `p > 3`, plus explicit-set subgroup machinery.

mod group;
mod presentation;
mod series;

pub use group::{
    abelian_invariants_of, is_normal, normal_closure, quotient, subgroup_closure, FiniteGroup,
    QuotientGroup, Subgroup,
};
pub use presentation::{
    is_prime, ConsistencyFailure, ConsistencyReport, Element, PcPresentation, Word, NGENS,
};
