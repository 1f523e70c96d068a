//! The seventy presentation families, their table rows, and the embedded
//! reference tables.

mod families;
mod tables;

pub use families::{
    all_rows, families, family, multiplicative_order, primitive_root, Coef, FamilySpec, Lhs,
    ParamKind, Params, Relation, RowId,
};
pub use tables::{
    ClassificationConflict, ClassificationRow, ConflictKind, ErratumEntry, ExpectedRecord,
    Fig1Entry, Fig2Entry, Source, Tables, EMBEDDED_JSON, SCHEMA_VERSION,
};

/// The expected invariants of `row` from the embedded tables.
pub fn expected_record(row: RowId, prime: u32) -> crate::Result<ExpectedRecord> {
    Tables::embedded().expected_record(row, prime)
}

/// The embedded errata ledger.
pub fn errata() -> &'static [ErratumEntry] {
    Tables::embedded().errata()
}
