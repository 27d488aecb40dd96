//! Text and JSON rendering. Rationals always appear as `"p/q"` strings in
//! JSON, and every list is emitted in a fixed order so output is
//! byte-deterministic.

use chiy_core::{ChernPolynomial, ConstraintReport, Quantity, Rational, Status, YPolynomial};
use serde_json::{json, Value};

/// One labelled row of a formula table.
pub struct TableRow {
    pub label: String,
    pub formula: ChernPolynomial<Rational>,
}

pub fn table_text(rows: &[TableRow]) -> String {
    rows.iter().map(|r| format!("{} = {}\n", r.label, r.formula)).collect()
}

/// Bare `p/q` for constants, the polynomial in `y` otherwise.
fn coefficient_text(c: &YPolynomial<Rational>) -> String {
    if c.is_constant() {
        c.coeff(0).to_string()
    } else {
        c.to_string()
    }
}

pub fn formula_json(formula: &ChernPolynomial<Rational>) -> Value {
    let terms: Vec<Value> = formula
        .terms()
        .rev()
        .map(|(p, c)| {
            json!({
                "partition": p.key(),
                "monomial": p.monomial_label(),
                "coefficient": coefficient_text(c),
            })
        })
        .collect();
    json!({ "text": formula.to_string(), "terms": terms })
}

pub fn table_json(command: &str, n: u32, depth: Option<u32>, rows: &[TableRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut v = formula_json(&r.formula);
            v["label"] = json!(r.label);
            v
        })
        .collect();
    let mut out = json!({ "command": command, "dimension": n });
    if let Some(k) = depth {
        out["depth"] = json!(k);
    }
    out["rows"] = Value::Array(rows);
    out
}

fn quantity_json(q: &Quantity) -> Value {
    match q {
        Quantity::Absent => Value::Null,
        other => json!(other.to_string()),
    }
}

pub fn report_json(r: &ConstraintReport) -> Value {
    json!({
        "id": r.id,
        "status": r.status.as_str(),
        "left": quantity_json(&r.left),
        "right": quantity_json(&r.right),
        "detail": r.detail,
    })
}

pub fn reports_text(reports: &[ConstraintReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

/// Counts per status, in a fixed order.
pub fn summary(reports: &[ConstraintReport]) -> String {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    format!(
        "{} satisfied, {} equality-attained, {} violated, {} not-applicable",
        count(Status::Satisfied),
        count(Status::EqualityAttained),
        count(Status::Violated),
        count(Status::NotApplicable),
    )
}

pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}
