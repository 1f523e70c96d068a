//! Table-shaped rendering of invariant records.

use serde::Serialize;

use super::{InvariantRecord, TensorStructure};
use crate::abelian::AbelianType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    Fig1,
    Fig2,
}

impl std::str::FromStr for Figure {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fig1" | "1" => Ok(Figure::Fig1),
            "fig2" | "2" => Ok(Figure::Fig2),
            _ => Err(crate::Error::Parse(format!("unknown table {s:?}"))),
        }
    }
}

/// One cell: a group type with its order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupCell {
    pub text: String,
    pub e1_factor: bool,
    pub exponents: Vec<u32>,
    pub log_order: u32,
    /// Decimal `p^log_order`.
    pub order: String,
}

impl GroupCell {
    fn new(t: &TensorStructure, prime: u64, numeric: bool) -> Self {
        Self {
            text: if numeric {
                t.display_at(prime)
            } else {
                t.to_string()
            },
            e1_factor: t.e1_factor,
            exponents: t.abelian_part.exponents().to_vec(),
            log_order: t.log_order(),
            order: t.order(prime).to_string(),
        }
    }

    fn abelian(a: &AbelianType, prime: u64, numeric: bool) -> Self {
        Self::new(&TensorStructure::abelian(a.clone()), prime, numeric)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub row: String,
    pub prime: u32,
    pub cl: usize,
    /// Column name to cell, in layout order.
    pub columns: Vec<(String, GroupCell)>,
}

impl TableRow {
    pub fn headers(which: Figure) -> &'static [&'static str] {
        match which {
            Figure::Fig1 => &["G", "cl", "M", "Z", "G'", "G^ab", "nabla", "J2"],
            Figure::Fig2 => &["G", "cl", "M", "G^G", "GxG", "Z^wedge", "Z^tensor"],
        }
    }

    /// Computed values where the engine produces them; `M`, `Z^∧` and `Z^⊗`
    /// are inputs and come from the tables. An exterior square the dispatch
    /// rejected is shown as the table value.
    pub fn from_record(r: &InvariantRecord, which: Figure, numeric: bool) -> Self {
        let p = u64::from(r.prime);
        let c = &r.computed;
        let e = &r.expected;
        let ab = |a: &AbelianType| GroupCell::abelian(a, p, numeric);
        let ts = |t: &TensorStructure| GroupCell::new(t, p, numeric);
        let columns: Vec<(&str, GroupCell)> = match which {
            Figure::Fig1 => vec![
                ("M", ab(&e.multiplier)),
                ("Z", ab(&c.center)),
                ("G'", ab(&c.derived)),
                ("G^ab", ab(&c.abelianization)),
                ("nabla", ab(&c.nabla)),
                ("J2", ab(&c.j2)),
            ],
            Figure::Fig2 => vec![
                ("M", ab(&e.multiplier)),
                ("G^G", ts(c.exterior_square.as_ref().unwrap_or(&e.exterior_square))),
                ("GxG", ts(c.tensor_square.as_ref().unwrap_or(&e.tensor_square))),
                ("Z^wedge", ab(&e.exterior_center)),
                ("Z^tensor", ab(&e.tensor_center)),
            ],
        };
        Self {
            row: r.row.to_string(),
            prime: r.prime,
            cl: c.cl,
            columns: columns.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    fn cells(&self) -> Vec<String> {
        let mut out = vec![self.row.clone(), self.cl.to_string()];
        out.extend(self.columns.iter().map(|(_, c)| c.text.clone()));
        out
    }
}

pub fn render_text(rows: &[TableRow], which: Figure) -> String {
    let headers: Vec<String> = TableRow::headers(which).iter().map(|s| s.to_string()).collect();
    let body: Vec<Vec<String>> = rows.iter().map(TableRow::cells).collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in &body {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = vec![line(&headers)];
    out.push(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("-+-"));
    out.extend(body.iter().map(|r| line(r)));
    out.join("\n") + "\n"
}

pub fn render_csv(rows: &[TableRow], which: Figure) -> String {
    let quote = |s: &str| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let mut out = vec![TableRow::headers(which).join(",")];
    for r in rows {
        out.push(r.cells().iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
    }
    out.join("\n") + "\n"
}

/// `{"table": ..., "prime": ..., "rows": [{"row", "cl", "<column>": cell}]}`.
pub fn render_json(rows: &[TableRow], which: Figure, prime: u32) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            let mut obj = serde_json::Map::new();
            obj.insert("row".into(), r.row.clone().into());
            obj.insert("cl".into(), r.cl.into());
            for (k, c) in &r.columns {
                obj.insert(k.clone(), serde_json::to_value(c).expect("cells serialize"));
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::json!({
        "table": which,
        "prime": prime,
        "rows": rows,
    })
}
