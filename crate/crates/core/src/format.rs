//! JSON exchange formats.
//!
//! Input files hold exactly one of
//!
//! ```json
//! {"presentation": {"relators": 1, "generators": 1, "matrix": [[[[0, -2], [1, 2]]]]}}
//! {"seifert": [[-1, 1], [0, -1]]}
//! ```
//!
//! A polynomial is a list of `[exponent, coefficient]` pairs with strictly
//! increasing exponents and nonzero coefficients. Output is compact JSON
//! with sorted keys, so serializing a parsed output reproduces it byte for
//! byte.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use crate::abgrp::{CanonicalForm, FgAbGroup};
use crate::decomp::{DecompositionReport, LatticeOutcome};
use crate::error::Error as AlgebraError;
use crate::exactlin::IntMatrix;
use crate::knot::{KnotReport, SeifertMatrix};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::present::LambdaPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{path}`: {message}")]
    Field { path: String, message: String },
}

fn field_err<T>(path: &str, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Field {
        path: path.to_string(),
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Presentation(LambdaPresentation),
    Seifert(SeifertMatrix),
}

impl Input {
    /// The presentation to analyze; Seifert matrices become `t·V - Vᵀ`.
    pub fn to_presentation(&self) -> LambdaPresentation {
        match self {
            Input::Presentation(p) => p.clone(),
            Input::Seifert(s) => crate::knot::seifert_to_presentation(s),
        }
    }
}

pub fn parse_input(text: &str) -> Result<Input, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Object(obj) = value else {
        return field_err("$", "expected an object with a `presentation` or `seifert` key");
    };
    if let Some(key) = obj
        .keys()
        .find(|k| k.as_str() != "presentation" && k.as_str() != "seifert")
    {
        return field_err(key, "unknown key");
    }
    match (obj.get("presentation"), obj.get("seifert")) {
        (Some(p), None) => Ok(Input::Presentation(presentation_from_json(p, "presentation")?)),
        (None, Some(s)) => {
            let v = int_matrix_from_json(s, "seifert", None)?;
            SeifertMatrix::new(v)
                .map(Input::Seifert)
                .or_else(|e| field_err("seifert", e.to_string()))
        }
        (Some(_), Some(_)) => field_err("$", "give either `presentation` or `seifert`, not both"),
        (None, None) => field_err("$", "missing `presentation` or `seifert`"),
    }
}

fn integer_from_json(v: &Value, path: &str) -> Result<BigInt, FormatError> {
    let Value::Number(n) = v else {
        return field_err(path, "expected an integer");
    };
    BigInt::from_str(&n.to_string()).or_else(|_| field_err(path, format!("`{n}` is not an integer")))
}

fn count_from_json(v: Option<&Value>, path: &str) -> Result<usize, FormatError> {
    match v.and_then(Value::as_u64) {
        Some(n) => usize::try_from(n).or_else(|_| field_err(path, "count too large")),
        None => field_err(path, "expected a nonnegative integer"),
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array()
        .map_or_else(|| field_err(path, "expected an array"), Ok)
}

pub fn poly_from_json(v: &Value, path: &str) -> Result<LaurentPoly, FormatError> {
    let mut terms = Vec::new();
    let mut last: Option<i64> = None;
    for (k, pair) in array(v, path)?.iter().enumerate() {
        let here = format!("{path}[{k}]");
        let items = array(pair, &here)?;
        if items.len() != 2 {
            return field_err(&here, "expected an [exponent, coefficient] pair");
        }
        let Some(exp) = items[0].as_i64() else {
            return field_err(&format!("{here}[0]"), "exponent must be an integer");
        };
        if last.is_some_and(|l| exp <= l) {
            return field_err(&format!("{here}[0]"), "exponents must be strictly increasing");
        }
        let coeff = integer_from_json(&items[1], &format!("{here}[1]"))?;
        if coeff == BigInt::from(0) {
            return field_err(&format!("{here}[1]"), "coefficients must be nonzero");
        }
        last = Some(exp);
        terms.push((exp, coeff));
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn presentation_from_json(v: &Value, path: &str) -> Result<LambdaPresentation, FormatError> {
    let Value::Object(obj) = v else {
        return field_err(path, "expected an object");
    };
    if let Some(key) = obj
        .keys()
        .find(|k| !matches!(k.as_str(), "relators" | "generators" | "matrix"))
    {
        return field_err(&format!("{path}.{key}"), "unknown key");
    }
    let r = count_from_json(obj.get("relators"), &format!("{path}.relators"))?;
    let s = count_from_json(obj.get("generators"), &format!("{path}.generators"))?;
    let mpath = format!("{path}.matrix");
    let Some(mv) = obj.get("matrix") else {
        return field_err(&mpath, "missing");
    };
    let rows = array(mv, &mpath)?;
    if rows.len() != r {
        return field_err(&mpath, format!("has {} rows but relators = {r}", rows.len()));
    }
    let mut entries = Vec::with_capacity(r * s);
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{mpath}[{i}]");
        let row = array(row, &rpath)?;
        if row.len() != s {
            return field_err(&rpath, format!("has {} entries but generators = {s}", row.len()));
        }
        for (j, e) in row.iter().enumerate() {
            entries.push(poly_from_json(e, &format!("{rpath}[{j}]"))?);
        }
    }
    let m = LaurentMatrix::from_vec(r, s, entries).expect("shape checked");
    Ok(LambdaPresentation::new(m))
}

fn int_matrix_from_json(
    v: &Value,
    path: &str,
    cols: Option<usize>,
) -> Result<IntMatrix, FormatError> {
    let rows = array(v, path)?;
    let width = cols.unwrap_or_else(|| rows.first().and_then(Value::as_array).map_or(0, Vec::len));
    let mut data = Vec::with_capacity(rows.len() * width);
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{path}[{i}]");
        let row = array(row, &rpath)?;
        if row.len() != width {
            return field_err(&rpath, format!("expected {width} entries, found {}", row.len()));
        }
        for (j, e) in row.iter().enumerate() {
            data.push(integer_from_json(e, &format!("{rpath}[{j}]"))?);
        }
    }
    Ok(IntMatrix::from_vec(rows.len(), width, data).expect("shape checked"))
}

pub fn int_to_json(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| Value::Array(vec![json!(e), int_to_json(c)]))
            .collect(),
    )
}

pub fn int_matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_to_json).collect()))
            .collect(),
    )
}

pub fn presentation_to_json(p: &LambdaPresentation) -> Value {
    let m = p.matrix();
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(poly_to_json).collect()))
        .collect();
    json!({
        "presentation": {
            "relators": p.relators(),
            "generators": p.generators(),
            "matrix": rows,
        }
    })
}

pub fn seifert_to_json(s: &SeifertMatrix) -> Value {
    json!({ "seifert": int_matrix_to_json(s.matrix()) })
}

fn opt_int(n: Option<&BigInt>) -> Value {
    n.map_or(Value::Null, int_to_json)
}

fn opt_poly(p: Option<&LaurentPoly>) -> Value {
    p.map_or(Value::Null, poly_to_json)
}

fn error_kind(e: &AlgebraError) -> &'static str {
    match e {
        AlgebraError::NotFree { .. } => "NotFree",
        AlgebraError::RankMismatch(_) => "RankMismatch",
        AlgebraError::Singular(_) => "Singular",
        _ => "Other",
    }
}

fn group_to_json(g: &FgAbGroup, form: &CanonicalForm, provenance: &[(usize, usize)]) -> Value {
    json!({
        "generators": g.gens(),
        "relations": int_matrix_to_json(g.relations()),
        "free_rank": form.free_rank,
        "torsion": form.torsion.iter().map(int_to_json).collect::<Vec<_>>(),
        "provenance": provenance.iter().map(|&(i, v)| json!([i, v])).collect::<Vec<_>>(),
    })
}

/// Summary of an order computation: the polynomial, its degree, the
/// coefficients `c_0 .. c_d` and their content.
pub fn order_summary_to_json(order: &LaurentPoly) -> Value {
    let coeffs: Vec<Value> = match (order.ord(), order.deg()) {
        (Some(lo), Some(hi)) => (lo..=hi).map(|e| int_to_json(&order.coeff(e))).collect(),
        _ => Vec::new(),
    };
    json!({
        "order": poly_to_json(order),
        "order_text": order.to_string(),
        "degree": order.span(),
        "coefficients": coeffs,
        "content": int_to_json(&order.content()),
    })
}

pub fn report_to_json(r: &DecompositionReport) -> Value {
    let a = &r.amalgam;
    let n = &r.normalization;
    let (lattice, absent) = match &r.lattice {
        LatticeOutcome::Present(l) => (
            json!({
                "d": l.d,
                "F": int_matrix_to_json(&l.f),
                "G": int_matrix_to_json(&l.g),
                "basis": "free bases of U and B from the Smith forms of their relations; F and G are basis-dependent",
            }),
            Value::Null,
        ),
        LatticeOutcome::Absent(e) => (
            Value::Null,
            json!({ "kind": error_kind(e), "message": e.to_string() }),
        ),
    };
    let mut checks = Map::new();
    for (name, v) in r.checks.named() {
        checks.insert(name.to_string(), v.map_or(Value::Null, Value::Bool));
    }
    json!({
        "order": poly_to_json(&r.order),
        "order_text": r.order.to_string(),
        "degree": r.degree,
        "c0": opt_int(r.c0.as_ref()),
        "cd": opt_int(r.cd.as_ref()),
        "content": int_to_json(&r.content),
        "normalization": {
            "nu": n.nu,
            "generator_shifts": n.generator_shifts,
            "relator_shifts": n.relator_shifts,
            "dropped_relators": n.dropped_relators,
            "free_generators": n.free_generators,
        },
        "amalgam": {
            "B": group_to_json(&a.b, &r.b_form, &a.b_provenance),
            "U": group_to_json(&a.u, &r.u_form, &a.u_provenance),
            "f": int_matrix_to_json(a.f.matrix()),
            "g": int_matrix_to_json(a.g.matrix()),
            "reduction_steps": a.reduction_steps,
        },
        "amalgam_order": poly_to_json(&r.amalgam_order),
        "lattice": lattice,
        "lattice_absent": absent,
        "char_poly": opt_poly(r.char_poly.as_ref()),
        "index_f": opt_int(r.index_f.as_ref()),
        "index_g": opt_int(r.index_g.as_ref()),
        "q": r.q,
        "q_definition": "minimal generator count of the final U: free rank plus number of torsion coefficients",
        "checks": Value::Object(checks),
    })
}

pub fn knot_report_to_json(k: &KnotReport) -> Value {
    json!({
        "alexander": poly_to_json(&k.alexander),
        "alexander_text": k.alexander.to_string(),
        "monic": k.monic,
        "palindromic": k.palindromic,
        "content": int_to_json(&k.content),
        "genus": k.genus,
        "pairing_det": int_to_json(&k.pairing_det),
        "decomposition": k.decomposition.as_ref().map_or(Value::Null, report_to_json),
        "warnings": k.warnings,
    })
}

/// Compact JSON with sorted keys.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}
