//! The full verification run: every row's invariant record, the errata
//! coverage of the raw classification lists, the capable set, and the oracle
//! suite.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{all_rows, ClassificationConflict, ErratumEntry, FamilySpec, RowId, Tables};
use crate::error::{Error, Result};
use crate::invariants::{compute_record, InvariantRecord, Status};
use crate::oracle::{
    counting_vs_snf, gamma_relation_check, tensor_sweep, CountingReport, GammaReport, QuadraticModel,
    DEFAULT_SEED,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub prime: u32,
    /// Restrict the invariant records to one family (all its rows).
    pub family: Option<u8>,
    pub seed: u64,
    pub gamma_trials: u64,
    pub counting_trials: u64,
    pub skip_oracles: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            prime: 5,
            family: None,
            seed: DEFAULT_SEED,
            gamma_trials: 10_000,
            counting_trials: 1_000,
            skip_oracles: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub tensor_pairs: usize,
    pub tensor_mismatches: Vec<String>,
    pub gamma: Vec<GammaReport>,
    pub counting: CountingReport,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.tensor_mismatches.is_empty() && self.gamma.iter().all(GammaReport::passed) && self.counting.passed()
    }

    pub fn gamma_failures(&self) -> Vec<&GammaReport> {
        self.gamma.iter().filter(|g| !g.passed()).collect()
    }
}

/// Every cyclic and two-factor model with odd moduli up to 49.
pub fn gamma_models() -> Vec<QuadraticModel> {
    let mut out = Vec::new();
    for a in (1..=49u64).step_by(2) {
        out.push(QuadraticModel::new(vec![a]));
        for b in (a..=49u64).step_by(2) {
            out.push(QuadraticModel::new(vec![a, b]));
        }
    }
    out
}

pub fn run_oracle_suite(seed: u64, gamma_trials: u64, counting_trials: u64) -> Result<OracleSummary> {
    let (tensor_pairs, tensor_mismatches) = tensor_sweep(&[3, 5, 7], 4, 3)?;
    let gamma = gamma_models()
        .par_iter()
        .enumerate()
        .map(|(i, m)| gamma_relation_check(m, gamma_trials, seed.wrapping_add(i as u64)))
        .collect();
    let counting = counting_vs_snf(counting_trials, seed)?;
    Ok(OracleSummary {
        tensor_pairs,
        tensor_mismatches,
        gamma,
        counting,
    })
}

/// Rows whose exterior center is trivial, once from the tables and once from
/// the raw epicenter list with the ledger applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapabilitySummary {
    pub from_tables: BTreeSet<RowId>,
    pub from_list: BTreeSet<RowId>,
    /// Rows the raw list leaves ambiguous and the ledger does not settle.
    pub unresolved: Vec<RowId>,
}

impl CapabilitySummary {
    pub fn compute(tables: &Tables) -> Self {
        let mut out = Self {
            from_tables: BTreeSet::new(),
            from_list: BTreeSet::new(),
            unresolved: Vec::new(),
        };
        for row in all_rows() {
            if tables.fig2(row).is_some_and(|e| e.exterior_center.is_trivial()) {
                out.from_tables.insert(row);
            }
            match tables.resolved_epicenter(row) {
                Some(z) if z.is_trivial() => {
                    out.from_list.insert(row);
                }
                Some(_) => {}
                None => out.unresolved.push(row),
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.unresolved.is_empty() && self.from_tables == self.from_list
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub prime: u32,
    pub seed: u64,
    pub records: Vec<InvariantRecord>,
    pub unexplained_conflicts: Vec<ClassificationConflict>,
    pub undetected_errata: Vec<ErratumEntry>,
    pub capability: CapabilitySummary,
    pub oracle: Option<OracleSummary>,
}

impl VerifyReport {
    /// One line per unexplained failure, naming the row.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.records {
            for v in r.verdicts.iter().filter(|v| v.status == Status::Fail) {
                out.push(format!("{} {}: {}", r.row, v.check, v.detail));
            }
        }
        for c in &self.unexplained_conflicts {
            out.push(format!("{} undocumented conflict: {c}", c.row));
        }
        for e in &self.undetected_errata {
            out.push(format!("{} documented conflict not detected: {}", e.row, e.description));
        }
        if !self.capability.passed() {
            out.push(format!(
                "capable set mismatch: tables {:?}, list {:?}, unresolved {:?}",
                self.capability.from_tables, self.capability.from_list, self.capability.unresolved
            ));
        }
        if let Some(o) = &self.oracle {
            out.extend(o.tensor_mismatches.iter().map(|m| format!("tensor oracle: {m}")));
            out.extend(o.gamma_failures().iter().map(|g| format!("gamma oracle: {g:?}")));
            out.extend(o.counting.mismatches.iter().map(|m| format!("counting oracle: {m}")));
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

pub fn verify(tables: &Tables, opts: &VerifyOptions) -> Result<VerifyReport> {
    let rows: Vec<RowId> = match opts.family {
        Some(f) => {
            let spec = crate::catalog::family(f).ok_or_else(|| Error::UnknownFamily(f.to_string()))?;
            all_rows().into_iter().filter(|r| r.family == spec.number).collect()
        }
        None => all_rows(),
    };
    let records = rows
        .into_par_iter()
        .map(|row| compute_record(tables, row, opts.prime, &FamilySpec::params_for_row(row, opts.prime)))
        .collect::<Result<Vec<_>>>()?;
    let (unexplained, undetected) = tables.errata_coverage();
    let oracle = if opts.skip_oracles {
        None
    } else {
        Some(run_oracle_suite(opts.seed, opts.gamma_trials, opts.counting_trials)?)
    };
    Ok(VerifyReport {
        prime: opts.prime,
        seed: opts.seed,
        records,
        unexplained_conflicts: unexplained,
        undetected_errata: undetected.into_iter().cloned().collect(),
        capability: CapabilitySummary::compute(tables),
        oracle,
    })
}
