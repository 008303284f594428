//! Canonical JSON encoding of scalars, matrices and structures.
//!
//! Objects are `serde_json::Map`s (sorted keys); rationals are `"num/den"`
//! strings and scalars are arrays of their power-basis coordinates.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::linalg::{Matrix, Vector};
use crate::scalar::{make_field, parse_rational, rational_to_string, Field, FieldContext, Rational, Scalar};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON field {0}")]
    Malformed(String),
    #[error("field mismatch: document uses conductor {found}, expected {expected}")]
    FieldMismatch { found: usize, expected: usize },
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
}

fn malformed(what: &str) -> JsonError {
    JsonError::Malformed(what.to_string())
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(rational_to_string(r))
}

pub fn scalar_json(s: &Scalar) -> Value {
    Value::Array(s.coords().iter().map(rational_json).collect())
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": vector_json(m.entries()) })
}

pub fn field_json(f: &FieldContext) -> Value {
    json!({
        "conductor": f.conductor(),
        "cyclotomic_poly": f.cyclotomic_poly().iter().map(rational_json).collect::<Vec<_>>(),
    })
}

pub fn parse_field(v: &Value) -> Result<Field, JsonError> {
    let n = v.get("conductor").and_then(Value::as_u64).ok_or_else(|| malformed("conductor"))? as usize;
    if n == 0 {
        return Err(malformed("conductor"));
    }
    let f = make_field(n);
    let poly = v.get("cyclotomic_poly").and_then(Value::as_array).ok_or_else(|| malformed("cyclotomic_poly"))?;
    let parsed: Result<Vec<Rational>, JsonError> = poly.iter().map(parse_rational_json).collect();
    if parsed? != f.cyclotomic_poly() {
        return Err(malformed("cyclotomic_poly"));
    }
    Ok(f)
}

pub fn parse_rational_json(v: &Value) -> Result<Rational, JsonError> {
    let s = v.as_str().ok_or_else(|| malformed("rational"))?;
    parse_rational(s).map_err(|_| malformed("rational"))
}

pub fn parse_scalar(f: &Field, v: &Value) -> Result<Scalar, JsonError> {
    let arr = v.as_array().ok_or_else(|| malformed("scalar"))?;
    if arr.len() != f.degree() {
        return Err(malformed("scalar length"));
    }
    let coords: Result<Vec<Rational>, JsonError> = arr.iter().map(parse_rational_json).collect();
    Ok(Scalar::from_coords(f, coords?))
}

pub fn parse_vector(f: &Field, v: &Value) -> Result<Vector, JsonError> {
    v.as_array().ok_or_else(|| malformed("vector"))?.iter().map(|s| parse_scalar(f, s)).collect()
}

pub fn parse_matrix(f: &Field, v: &Value) -> Result<Matrix, JsonError> {
    let rows = v.get("rows").and_then(Value::as_u64).ok_or_else(|| malformed("rows"))? as usize;
    let cols = v.get("cols").and_then(Value::as_u64).ok_or_else(|| malformed("cols"))? as usize;
    let entries = parse_vector(f, v.get("entries").ok_or_else(|| malformed("entries"))?)?;
    if entries.len() != rows * cols {
        return Err(malformed("entries length"));
    }
    Ok(Matrix::from_entries(f, rows, cols, entries))
}

/// Wraps a payload object with the shared document header.
pub fn document(field: &FieldContext, basis_convention: &str, payload: Value) -> Value {
    let mut m = match payload {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("data".into(), other);
            m
        }
    };
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("field".into(), field_json(field));
    m.insert("basis_convention".into(), json!(basis_convention));
    Value::Object(m)
}

/// Reads the header of a document and returns its field.
pub fn document_field(doc: &Value) -> Result<Field, JsonError> {
    let version = doc.get("schema_version").and_then(Value::as_u64).ok_or_else(|| malformed("schema_version"))?;
    if version != SCHEMA_VERSION {
        return Err(malformed("schema_version"));
    }
    parse_field(doc.get("field").ok_or_else(|| malformed("field"))?)
}

/// Canonical bytes: compact, sorted keys, trailing newline.
pub fn emit_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn emit_json_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::zeta_power;

    #[test]
    fn field_two_emits_exactly() {
        let f = make_field(2);
        assert_eq!(
            serde_json::to_string(&field_json(&f)).unwrap(),
            r#"{"conductor":2,"cyclotomic_poly":["1","1"]}"#
        );
        assert_eq!(parse_field(&field_json(&f)).unwrap().conductor(), 2);
    }

    #[test]
    fn scalar_and_matrix_round_trip() {
        let f = make_field(5);
        let s = &zeta_power(&f, 3) + &Scalar::from_rational(&f, crate::scalar::rational(-3, 7));
        assert_eq!(parse_scalar(&f, &scalar_json(&s)).unwrap(), s);
        let m = Matrix::from_fn(&f, 2, 3, |r, c| zeta_power(&f, (r * 3 + c) as i64));
        assert_eq!(parse_matrix(&f, &matrix_json(&m)).unwrap(), m);
    }

    #[test]
    fn document_header() {
        let f = make_field(3);
        let doc = document(&f, "test", json!({"dim": 1}));
        let text = emit_json(&doc);
        assert!(text.starts_with(r#"{"basis_convention":"test","dim":1,"field":"#));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(document_field(&back).unwrap().conductor(), 3);
    }
}
