//! JSON serialization of reports. The schema is fixed: every spectrum
//! entry carries {value_kind, p, d, q, mult}, where an integer eigenvalue
//! v is encoded as p=v, d=0, q=1 and a surd pair (p ± √d)/q uses its
//! normalized components. Roots of an irreducible factor carry the
//! polynomial text alongside null p/d/q.

use serde_json::{json, Value};

use cocg_core::closed_form::{EigenvalueExpr, MatrixKind};
use cocg_core::verify::ScanRow;
use cocg_core::{FiniteGroup, GroupSpec, VerificationReport};

pub fn params_json(spec: &GroupSpec) -> Value {
    match *spec {
        GroupSpec::Q4n { n } => json!({ "n": n }),
        GroupSpec::D2m { m } => json!({ "m": m }),
        GroupSpec::Qd2n { n } => json!({ "n": n }),
        GroupSpec::M2mn { m, n } => json!({ "m": m, "n": n }),
        GroupSpec::Psl2 { k } => json!({ "k": k }),
    }
}

pub fn group_json(
    spec: &GroupSpec,
    group: &FiniteGroup,
    multiset: &[(usize, usize)],
) -> Value {
    json!({
        "family": spec.family_name(),
        "params": params_json(spec),
        "order": group.order(),
        "center_size": group.center().len(),
        "centralizer_cardinalities": multiset
            .iter()
            .map(|(card, count)| json!({ "cardinality": card, "count": count }))
            .collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &VerificationReport) -> Value {
    let spectrum: Vec<Value> = r
        .claimed
        .as_ref()
        .map(|c| c.entries.iter().map(|(e, m)| entry_json(e, *m)).collect())
        .unwrap_or_default();
    json!({
        "family": r.spec.family_name(),
        "params": params_json(&r.spec),
        "kind": r.kind.name(),
        "outcome": r.outcome.name(),
        "detail": match &r.outcome {
            cocg_core::Outcome::ExactMatch => Value::Null,
            cocg_core::Outcome::Mismatch(d) => json!(d),
            cocg_core::Outcome::Degenerate(d) => json!(d),
        },
        "charpoly": r.charpoly.as_ref().map(|p| p.to_string()),
        "spectrum": spectrum,
        "numeric_residual": r.numeric_residual,
        "notes": r.notes,
    })
}

fn entry_json(expr: &EigenvalueExpr, mult: usize) -> Value {
    match expr {
        EigenvalueExpr::Int(v) => json!({
            "value_kind": "int", "p": v, "d": 0, "q": 1, "mult": mult,
        }),
        EigenvalueExpr::SurdPair(s) => json!({
            "value_kind": "surd", "p": s.p, "d": s.d, "q": s.q, "mult": mult,
        }),
        EigenvalueExpr::PolyRoots(p) => json!({
            "value_kind": "poly", "p": Value::Null, "d": Value::Null,
            "q": Value::Null, "poly": p.to_string(), "mult": mult,
        }),
    }
}

pub fn scan_row_json(family: &str, kind: MatrixKind, row: &ScanRow) -> Value {
    json!({
        "family": family,
        "param": row.param,
        "kind": kind.name(),
        "condition_holds": row.condition_holds,
        "spectrum_integral": row.spectrum_integral,
        "witness": row.witness,
    })
}
