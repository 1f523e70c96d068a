//! The reference tables, the raw classification lists they resolve, and the
//! errata ledger, loaded from a versioned JSON document.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::families::{all_rows, RowId};
use crate::abelian::AbelianType;
use crate::error::{Error, Result};
use crate::invariants::TensorStructure;

pub const SCHEMA_VERSION: u32 = 1;

/// The table document compiled into the crate.
pub const EMBEDDED_JSON: &str = include_str!("../../data/tables.json");

/// Group types are stored in their text form inside the data file.
mod as_text {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Fig1,
    Fig2,
    MultiplierClassification,
    EpicenterClassification,
    /// Prose lists elsewhere in the source text; not machine-checked.
    Text,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Fig1 => "fig1",
            Source::Fig2 => "fig2",
            Source::MultiplierClassification => "multiplier_classification",
            Source::EpicenterClassification => "epicenter_classification",
            Source::Text => "text",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fig1Entry {
    pub row: RowId,
    pub cl: usize,
    #[serde(with = "as_text")]
    pub multiplier: AbelianType,
    #[serde(with = "as_text")]
    pub center: AbelianType,
    #[serde(with = "as_text")]
    pub derived: AbelianType,
    #[serde(with = "as_text")]
    pub abelianization: AbelianType,
    #[serde(with = "as_text")]
    pub nabla: AbelianType,
    #[serde(with = "as_text")]
    pub j2: AbelianType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fig2Entry {
    pub row: RowId,
    pub cl: usize,
    #[serde(with = "as_text")]
    pub multiplier: AbelianType,
    #[serde(with = "as_text")]
    pub exterior_square: TensorStructure,
    #[serde(with = "as_text")]
    pub tensor_square: TensorStructure,
    #[serde(with = "as_text")]
    pub exterior_center: AbelianType,
    #[serde(with = "as_text")]
    pub tensor_center: AbelianType,
}

/// One line of a raw classification list: every row the source places
/// under `type`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    #[serde(rename = "type", with = "as_text")]
    pub group_type: AbelianType,
    pub rows: Vec<RowId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConflictKind {
    /// Listed twice under the same type.
    Duplicate,
    /// Listed under two different types.
    Conflicting,
    /// Not listed at all.
    Missing,
    /// Listed once, under a type the tables disagree with.
    Mismatch,
    /// A discrepancy in prose that no loaded list encodes.
    TextOnly,
    /// A table entry contradicted by the group's own presentation.
    TableEntry,
}

impl fmt::Display for ConflictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConflictKind::Duplicate => "duplicate",
            ConflictKind::Conflicting => "conflicting",
            ConflictKind::Missing => "missing",
            ConflictKind::Mismatch => "mismatch",
            ConflictKind::TextOnly => "text_only",
            ConflictKind::TableEntry => "table_entry",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErratumEntry {
    pub row: RowId,
    pub kind: ConflictKind,
    /// The source holding the discrepancy first, then the sources it was
    /// checked against.
    pub sources: Vec<Source>,
    /// For table entries: the column at fault, named as in the record.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub description: String,
    pub resolution: String,
}

impl ErratumEntry {
    /// `(row, list)` for entries a classification-list check should raise.
    pub fn detection_key(&self) -> Option<(RowId, Source)> {
        match (self.kind, self.sources.first()) {
            (ConflictKind::TextOnly | ConflictKind::TableEntry, _) | (_, None) => None,
            (_, Some(&s)) => Some((self.row, s)),
        }
    }
}

/// Disagreement between a raw classification list and the tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationConflict {
    pub row: RowId,
    pub source: Source,
    pub kind: ConflictKind,
    pub listed: Vec<AbelianType>,
    pub table: AbelianType,
}

impl fmt::Display for ClassificationConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let listed: Vec<String> = self.listed.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} {:?} in {}: listed as [{}], tables give {}",
            self.row,
            self.kind,
            self.source,
            listed.join("; "),
            self.table
        )
    }
}

/// Every expected invariant of one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedRecord {
    pub row: RowId,
    pub prime: u32,
    pub cl: usize,
    pub multiplier: AbelianType,
    pub center: AbelianType,
    pub derived: AbelianType,
    pub abelianization: AbelianType,
    pub nabla: AbelianType,
    pub j2: AbelianType,
    pub exterior_square: TensorStructure,
    pub tensor_square: TensorStructure,
    pub exterior_center: AbelianType,
    pub tensor_center: AbelianType,
}

impl ExpectedRecord {
    /// Which table a field is read from.
    pub fn source_of(field: &str) -> Option<Source> {
        match field {
            "cl" | "multiplier" | "center" | "derived" | "abelianization" | "nabla" | "j2" => {
                Some(Source::Fig1)
            }
            "exterior_square" | "tensor_square" | "exterior_center" | "tensor_center" => {
                Some(Source::Fig2)
            }
            _ => None,
        }
    }

    /// Field name to rendered value with `p` instantiated.
    pub fn instantiated(&self) -> BTreeMap<&'static str, String> {
        let p = u64::from(self.prime);
        BTreeMap::from([
            ("cl", self.cl.to_string()),
            ("multiplier", self.multiplier.display_at(p)),
            ("center", self.center.display_at(p)),
            ("derived", self.derived.display_at(p)),
            ("abelianization", self.abelianization.display_at(p)),
            ("nabla", self.nabla.display_at(p)),
            ("j2", self.j2.display_at(p)),
            ("exterior_square", self.exterior_square.display_at(p)),
            ("tensor_square", self.tensor_square.display_at(p)),
            ("exterior_center", self.exterior_center.display_at(p)),
            ("tensor_center", self.tensor_center.display_at(p)),
        ])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub schema_version: u32,
    #[serde(default)]
    pub description: String,
    pub fig1: Vec<Fig1Entry>,
    pub fig2: Vec<Fig2Entry>,
    pub multiplier_classification: Vec<ClassificationRow>,
    pub epicenter_classification: Vec<ClassificationRow>,
    #[serde(default)]
    pub errata: Vec<ErratumEntry>,
}

impl Tables {
    pub fn embedded() -> &'static Tables {
        static TABLES: OnceLock<Tables> = OnceLock::new();
        TABLES.get_or_init(|| Tables::from_json(EMBEDDED_JSON).expect("embedded tables are well-formed"))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: Tables = serde_json::from_str(s).map_err(|e| Error::Data(e.to_string()))?;
        t.check_shape()?;
        Ok(t)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    /// Every row appears exactly once per figure, and the columns the two
    /// figures share agree.
    fn check_shape(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Data(format!(
                "schema version {} is not the supported {SCHEMA_VERSION}",
                self.schema_version
            )));
        }
        let want: BTreeSet<RowId> = all_rows().into_iter().collect();
        for (name, rows) in [
            ("fig1", self.fig1.iter().map(|e| e.row).collect::<Vec<_>>()),
            ("fig2", self.fig2.iter().map(|e| e.row).collect()),
        ] {
            let got: BTreeSet<RowId> = rows.iter().copied().collect();
            if got.len() != rows.len() {
                return Err(Error::Data(format!("{name} lists a row twice")));
            }
            if let Some(r) = want.difference(&got).next() {
                return Err(Error::Data(format!("{name} has no row {r}")));
            }
        }
        for e2 in &self.fig2 {
            let e1 = self.fig1(e2.row).expect("checked above");
            if e1.cl != e2.cl || e1.multiplier != e2.multiplier {
                return Err(Error::Data(format!(
                    "{}: fig1 and fig2 disagree on class or multiplier",
                    e2.row
                )));
            }
        }
        Ok(())
    }

    pub fn fig1(&self, row: RowId) -> Option<&Fig1Entry> {
        self.fig1.iter().find(|e| e.row == row)
    }

    pub fn fig2(&self, row: RowId) -> Option<&Fig2Entry> {
        self.fig2.iter().find(|e| e.row == row)
    }

    pub fn expected_record(&self, row: RowId, prime: u32) -> Result<ExpectedRecord> {
        let missing = || Error::UnknownFamily(row.to_string());
        let f1 = self.fig1(row).ok_or_else(missing)?;
        let f2 = self.fig2(row).ok_or_else(missing)?;
        Ok(ExpectedRecord {
            row,
            prime,
            cl: f1.cl,
            multiplier: f1.multiplier.clone(),
            center: f1.center.clone(),
            derived: f1.derived.clone(),
            abelianization: f1.abelianization.clone(),
            nabla: f1.nabla.clone(),
            j2: f1.j2.clone(),
            exterior_square: f2.exterior_square.clone(),
            tensor_square: f2.tensor_square.clone(),
            exterior_center: f2.exterior_center.clone(),
            tensor_center: f2.tensor_center.clone(),
        })
    }

    pub fn errata(&self) -> &[ErratumEntry] {
        &self.errata
    }

    pub fn errata_for(&self, row: RowId) -> Vec<&ErratumEntry> {
        self.errata.iter().filter(|e| e.row == row).collect()
    }

    /// The table erratum covering `field` of `row`, if any.
    pub fn table_erratum(&self, row: RowId, field: &str) -> Option<&ErratumEntry> {
        self.errata.iter().find(|e| {
            e.row == row && e.kind == ConflictKind::TableEntry && e.field.as_deref() == Some(field)
        })
    }

    /// Compares each raw classification list with the column of the tables
    /// it summarizes: multipliers with the `M` column, epicenters with the
    /// `Z^∧` column.
    pub fn classification_conflicts(&self) -> Vec<ClassificationConflict> {
        let mut out = Vec::new();
        let lists: [(Source, &[ClassificationRow]); 2] = [
            (Source::MultiplierClassification, &self.multiplier_classification),
            (Source::EpicenterClassification, &self.epicenter_classification),
        ];
        for (source, list) in lists {
            for row in all_rows() {
                let listed: Vec<AbelianType> = list
                    .iter()
                    .flat_map(|c| c.rows.iter().filter(|r| **r == row).map(|_| c.group_type.clone()))
                    .collect();
                let table = match source {
                    Source::MultiplierClassification => self.fig1(row).map(|e| e.multiplier.clone()),
                    _ => self.fig2(row).map(|e| e.exterior_center.clone()),
                }
                .expect("shape checked on load");
                let distinct: BTreeSet<&AbelianType> = listed.iter().collect();
                let kind = match (listed.len(), distinct.len()) {
                    (0, _) => Some(ConflictKind::Missing),
                    (1, _) if listed[0] == table => None,
                    (1, _) => Some(ConflictKind::Mismatch),
                    (_, 1) => Some(ConflictKind::Duplicate),
                    _ => Some(ConflictKind::Conflicting),
                };
                if let Some(kind) = kind {
                    out.push(ClassificationConflict {
                        row,
                        source,
                        kind,
                        listed,
                        table,
                    });
                }
            }
        }
        out
    }

    /// The epicenter a row gets from the raw list once the ledger is applied:
    /// the single listing when the row is undisputed, the table value when a
    /// ledger entry covers it, `None` for an undocumented dispute.
    pub fn resolved_epicenter(&self, row: RowId) -> Option<AbelianType> {
        let documented = self
            .errata
            .iter()
            .any(|e| e.detection_key() == Some((row, Source::EpicenterClassification)));
        if documented {
            return self.fig2(row).map(|e| e.exterior_center.clone());
        }
        let listed: Vec<&AbelianType> = self
            .epicenter_classification
            .iter()
            .flat_map(|c| c.rows.iter().filter(|r| **r == row).map(move |_| &c.group_type))
            .collect();
        match listed.as_slice() {
            [one] => Some((*one).clone()),
            _ => None,
        }
    }

    /// Detected conflicts with no ledger entry, and ledger entries that were
    /// not detected.
    pub fn errata_coverage(&self) -> (Vec<ClassificationConflict>, Vec<&ErratumEntry>) {
        let detected = self.classification_conflicts();
        let documented: BTreeMap<(RowId, Source), &ErratumEntry> = self
            .errata
            .iter()
            .filter_map(|e| e.detection_key().map(|k| (k, e)))
            .collect();
        let found: BTreeSet<(RowId, Source)> = detected.iter().map(|c| (c.row, c.source)).collect();
        let unexplained = detected
            .into_iter()
            .filter(|c| !documented.contains_key(&(c.row, c.source)))
            .collect();
        let undetected = documented
            .into_iter()
            .filter(|(k, _)| !found.contains(k))
            .map(|(_, e)| e)
            .collect();
        (unexplained, undetected)
    }
}
