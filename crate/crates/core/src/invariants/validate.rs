use std::fmt;

use serde::Serialize;

use super::InvariantRecord;
use crate::catalog::{ErratumEntry, Tables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Failed against a table entry that the errata ledger documents as
    /// wrong.
    Explained,
    NotComputable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Explained => "ERRATUM",
            Status::NotComputable => "N/A",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
    /// Ledger entries for the row, attached to failures for context.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<ErratumEntry>,
}

fn verdict(check: &'static str, ok: bool, detail: String) -> Verdict {
    Verdict {
        check,
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
        errata: Vec::new(),
    }
}

fn eq_check<T: PartialEq + fmt::Display>(check: &'static str, got: &T, want: &T) -> Verdict {
    verdict(check, got == want, format!("computed {got}, expected {want}"))
}

/// Structural matches, order identities, center chain and exponent checks
/// for one record.
pub fn validate(r: &InvariantRecord, tables: &Tables) -> Vec<Verdict> {
    let c = &r.computed;
    let e = &r.expected;
    let mut out = vec![
        verdict("cl", c.cl == e.cl, format!("computed {}, expected {}", c.cl, e.cl)),
        eq_check("center", &c.center, &e.center),
        eq_check("derived", &c.derived, &e.derived),
        eq_check("abelianization", &c.abelianization, &e.abelianization),
        eq_check(
            "abelianization_by_quotient",
            &c.abelianization_by_quotient,
            &c.abelianization,
        ),
        eq_check("nabla", &c.nabla, &e.nabla),
        eq_check("j2", &c.j2, &e.j2),
    ];

    match (&c.exterior_square, &c.tensor_square) {
        (Some(w), Some(t)) => {
            out.push(eq_check("exterior_square", w, &e.exterior_square));
            out.push(eq_check("tensor_square", t, &e.tensor_square));
        }
        _ => {
            let why = c.exterior_square_error.clone().unwrap_or_default();
            out.push(verdict("exterior_square", false, why.clone()));
            out.push(Verdict {
                check: "tensor_square",
                status: Status::NotComputable,
                detail: format!("needs the exterior square: {why}"),
                errata: Vec::new(),
            });
        }
    }

    // Order bookkeeping on the table values, with c.derived as |G'|.
    let lw = e.exterior_square.log_order();
    let lt = e.tensor_square.log_order();
    let (lm, ld, ln, lj) = (
        e.multiplier.log_order(),
        c.derived.log_order(),
        c.nabla.log_order(),
        e.j2.log_order(),
    );
    out.push(verdict(
        "order_wedge_eq_m_times_derived",
        lw == lm + ld,
        format!("|G∧G| = p^{lw}, |M||G'| = p^{}", lm + ld),
    ));
    out.push(verdict(
        "order_tensor_eq_nabla_times_wedge",
        lt == ln + lw,
        format!("|G⊗G| = p^{lt}, |∇||G∧G| = p^{}", ln + lw),
    ));
    out.push(verdict(
        "order_tensor_eq_j2_times_derived",
        lt == lj + ld,
        format!("|G⊗G| = p^{lt}, |J2||G'| = p^{}", lj + ld),
    ));

    let (zt, zw, zg) = (
        e.tensor_center.log_order(),
        e.exterior_center.log_order(),
        c.center.log_order(),
    );
    out.push(verdict(
        "center_chain",
        zt <= zw && zw <= zg,
        format!("|Z^⊗| = p^{zt}, |Z^∧| = p^{zw}, |Z(G)| = p^{zg}"),
    ));
    if c.derived.is_trivial() {
        out.push(verdict(
            "abelian_tensor_center_trivial",
            e.tensor_center.is_trivial(),
            format!("Z^⊗ = {}", e.tensor_center),
        ));
    }
    if c.log_exponent == 1 {
        for (check, t) in [
            ("exponent_p_exterior_square", &e.exterior_square),
            ("exponent_p_tensor_square", &e.tensor_square),
        ] {
            out.push(verdict(
                check,
                t.log_exponent() <= 1,
                format!("G has exponent p; entry is {t}"),
            ));
        }
    }

    let errata: Vec<ErratumEntry> = tables.errata_for(r.row).into_iter().cloned().collect();
    for v in out.iter_mut().filter(|v| v.status == Status::Fail) {
        if let Some(e) = tables.table_erratum(r.row, v.check) {
            v.status = Status::Explained;
            v.errata = vec![e.clone()];
        } else {
            v.errata.clone_from(&errata);
        }
    }
    out
}
