use rayon::prelude::*;
use serde::Serialize;

use super::TensorStructure;
use crate::abelian::{ab_from_presentation, AbelianType};
use crate::catalog::{FamilySpec, Params, RowId, Tables};
use crate::catalog::ExpectedRecord;
use crate::error::{Error, Result};
use crate::pc_engine::{abelian_invariants_of, quotient, PcPresentation};

/// `∇(G) = Γ(G^ab)`.
pub fn nabla(ab: &AbelianType, prime: u32) -> Result<AbelianType> {
    ab.gamma(prime.into())
}

/// `J₂(G) = Γ(G^ab) ⊕ M(G)`.
pub fn j2(nabla: &AbelianType, multiplier: &AbelianType) -> AbelianType {
    nabla.direct_sum(multiplier)
}

/// How the exterior square was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WedgeRoute {
    /// `G` abelian: `∧²(G^ab)`, which must equal `M(G)`.
    Abelian,
    /// `M(G) = 1`: `G∧G ≅ G'`.
    TrivialMultiplier,
    /// Table value, accepted after the order and exponent checks.
    Table,
}

/// Structure facts the exterior-square dispatch needs from the engine.
#[derive(Clone, Debug)]
pub struct WedgeInputs<'a> {
    pub row: RowId,
    pub abelianization: &'a AbelianType,
    pub derived: &'a AbelianType,
    pub log_exponent: u32,
    pub multiplier: &'a AbelianType,
}

pub fn exterior_square(
    inp: &WedgeInputs<'_>,
    expected: &TensorStructure,
) -> Result<(TensorStructure, WedgeRoute)> {
    if inp.derived.is_trivial() {
        let w = inp.abelianization.exterior_square();
        if &w != inp.multiplier {
            return Err(Error::MultiplierMismatch {
                row: inp.row.to_string(),
                computed: w.to_string(),
                expected: inp.multiplier.to_string(),
            });
        }
        return Ok((TensorStructure::abelian(w), WedgeRoute::Abelian));
    }
    if inp.multiplier.is_trivial() {
        return Ok((TensorStructure::abelian(inp.derived.clone()), WedgeRoute::TrivialMultiplier));
    }
    let want = inp.multiplier.log_order() + inp.derived.log_order();
    if expected.log_order() != want {
        return Err(Error::OrderIdentityViolation {
            row: inp.row.to_string(),
            wedge: expected.log_order(),
            expected: want,
        });
    }
    if inp.log_exponent == 1 && expected.log_exponent() > 1 {
        return Err(Error::ExponentViolation {
            row: inp.row.to_string(),
            detail: format!("G has exponent p but the exterior square {expected} does not"),
        });
    }
    Ok((expected.clone(), WedgeRoute::Table))
}

/// `G⊗G ≅ Γ(G^ab) × G∧G` for `G^ab` of odd order.
pub fn tensor_square(gamma_ab: &AbelianType, wedge: &TensorStructure) -> TensorStructure {
    wedge.direct_sum(gamma_ab)
}

/// `G` is capable iff `Z^∧(G) = 1`.
pub fn capability(expected: &ExpectedRecord) -> bool {
    expected.exterior_center.is_trivial()
}

/// What the engine and the abelian calculus produce for one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub cl: usize,
    pub log_exponent: u32,
    pub center: AbelianType,
    pub derived: AbelianType,
    pub abelianization: AbelianType,
    /// `G/G'` by order counting in the explicit quotient.
    pub abelianization_by_quotient: AbelianType,
    pub nabla: AbelianType,
    pub j2: AbelianType,
    pub exterior_square: Option<TensorStructure>,
    pub exterior_square_route: Option<WedgeRoute>,
    /// Why the exterior square could not be produced.
    pub exterior_square_error: Option<String>,
    pub tensor_square: Option<TensorStructure>,
    pub capable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub row: RowId,
    pub prime: u32,
    pub params: Params,
    pub relations: Vec<String>,
    pub computed: Computed,
    pub expected: ExpectedRecord,
    pub verdicts: Vec<super::Verdict>,
}

impl InvariantRecord {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != super::Status::Fail)
    }
}

/// Builds the row's group and computes every invariant, then validates the
/// result against `tables`.
pub fn compute_record(tables: &Tables, row: RowId, prime: u32, params: &Params) -> Result<InvariantRecord> {
    let spec = row.spec();
    if spec.row(prime, params) != row {
        return Err(Error::BadParam {
            name: "k".into(),
            value: params.k,
            domain: format!("values selecting row {row}"),
        });
    }
    let pc = spec.build(prime, params)?;
    let expected = tables.expected_record(row, prime)?;
    let computed = compute(&pc, row, &expected)?;
    let mut record = InvariantRecord {
        row,
        prime,
        params: *params,
        relations: pc.relations(),
        computed,
        expected,
        verdicts: Vec::new(),
    };
    record.verdicts = super::validate(&record, tables);
    Ok(record)
}

/// Record for a family with explicit parameters; the row follows from them.
pub fn compute_family(tables: &Tables, family: u8, prime: u32, params: &Params) -> Result<InvariantRecord> {
    let spec = crate::catalog::family(family).ok_or_else(|| Error::UnknownFamily(family.to_string()))?;
    compute_record(tables, spec.row(prime, params), prime, params)
}

/// Every row at `prime` with the parameters that realize it, in parallel.
pub fn compute_all(tables: &Tables, prime: u32) -> Result<Vec<InvariantRecord>> {
    crate::catalog::all_rows()
        .into_par_iter()
        .map(|row| compute_record(tables, row, prime, &FamilySpec::params_for_row(row, prime)))
        .collect()
}

fn compute(pc: &PcPresentation, row: RowId, expected: &ExpectedRecord) -> Result<Computed> {
    let p = pc.prime();
    let all = pc.validate()?;
    let derived_sub = pc.derived_subgroup();
    let center_sub = pc.center(&all);
    let center = abelian_invariants_of(pc, &center_sub, p.into())?;
    let derived = abelian_invariants_of(pc, &derived_sub, p.into())?;
    let abelianization = ab_from_presentation(pc)?;
    let q = quotient(pc, &all, &derived_sub)?;
    let abelianization_by_quotient = abelian_invariants_of(&q, &q.as_subgroup(), p.into())?;
    let log_exponent = pc.log_exponent(&all);
    let nabla = nabla(&abelianization, p)?;
    let j2 = j2(&nabla, &expected.multiplier);
    let inputs = WedgeInputs {
        row,
        abelianization: &abelianization,
        derived: &derived,
        log_exponent,
        multiplier: &expected.multiplier,
    };
    let (exterior_square, exterior_square_route, exterior_square_error) =
        match exterior_square(&inputs, &expected.exterior_square) {
            Ok((w, r)) => (Some(w), Some(r), None),
            Err(e) => (None, None, Some(e.to_string())),
        };
    let tensor_square = exterior_square.as_ref().map(|w| tensor_square(&nabla, w));
    Ok(Computed {
        cl: pc.nilpotency_class(),
        log_exponent,
        center,
        derived,
        abelianization,
        abelianization_by_quotient,
        nabla,
        j2,
        exterior_square,
        exterior_square_route,
        exterior_square_error,
        tensor_square,
        capable: capability(expected),
    })
}
