//! Invariant records: what the engine computes for a family, what the tables
//! say, and the checks tying the two together.

mod compute;
pub mod report;
mod structure;
mod validate;

pub use compute::{
    capability, compute_all, compute_family, compute_record, exterior_square, j2, nabla,
    tensor_square, Computed, InvariantRecord, WedgeInputs, WedgeRoute,
};
pub use structure::TensorStructure;
pub use validate::{validate, Status, Verdict};
