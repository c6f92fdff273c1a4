//! Element files: a JSON list of `(n+1) × (n+1)` complex matrices.
//!
//! Each matrix is a flat row-major list of `[re, im]` pairs or a list of rows
//! of such pairs. The top level is either the list itself or an object with
//! an `"elements"` field holding it.

use nalgebra::DMatrix;
use serde_json::{json, Value};

use crate::ball::C64;
use crate::isometry::Isometry;
use crate::{GeomError, Result};

fn parse_err(msg: impl Into<String>) -> GeomError {
    GeomError::Parse(msg.into())
}

fn parse_entry(v: &Value, at: &str) -> Result<C64> {
    match v.as_array().map(Vec::as_slice) {
        Some([re, im]) => match (re.as_f64(), im.as_f64()) {
            (Some(re), Some(im)) => Ok(C64::new(re, im)),
            _ => Err(parse_err(format!("{at}: entries must be numbers"))),
        },
        _ => Err(parse_err(format!("{at}: expected a [re, im] pair"))),
    }
}

fn is_pair(v: &Value) -> bool {
    v.as_array().is_some_and(|a| a.len() == 2 && a.iter().all(Value::is_number))
}

fn parse_matrix(v: &Value, index: usize) -> Result<DMatrix<C64>> {
    let at = format!("element {index}");
    let items = v.as_array().ok_or_else(|| parse_err(format!("{at}: expected a list")))?;
    let mut entries = Vec::new();
    if items.first().is_some_and(is_pair) {
        for (i, e) in items.iter().enumerate() {
            entries.push(parse_entry(e, &format!("{at}, entry {i}"))?);
        }
    } else {
        let size = items.len();
        for (r, row) in items.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| parse_err(format!("{at}, row {r}: expected a list")))?;
            if row.len() != size {
                return Err(parse_err(format!("{at}, row {r}: expected {size} entries, got {}", row.len())));
            }
            for (c, e) in row.iter().enumerate() {
                entries.push(parse_entry(e, &format!("{at}, row {r}, column {c}"))?);
            }
        }
    }
    let size = (entries.len() as f64).sqrt().round() as usize;
    if size * size != entries.len() || size < 2 {
        return Err(parse_err(format!(
            "{at}: {} entries do not form a square matrix of size >= 2",
            entries.len()
        )));
    }
    Ok(DMatrix::from_row_slice(size, size, &entries))
}

/// Parses and validates an element file.
pub fn parse_elements(text: &str) -> Result<Vec<Isometry>> {
    let root: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let list = match &root {
        Value::Object(map) => map.get("elements").ok_or_else(|| parse_err("missing \"elements\""))?,
        other => other,
    };
    let items = list.as_array().ok_or_else(|| parse_err("expected a list of matrices"))?;
    let mut out: Vec<Isometry> = Vec::with_capacity(items.len());
    for (i, v) in items.iter().enumerate() {
        let m = parse_matrix(v, i)?;
        if let Some(first) = out.first() {
            if first.n() + 1 != m.nrows() {
                return Err(parse_err(format!(
                    "element {i} has size {}, expected {}",
                    m.nrows(),
                    first.n() + 1
                )));
            }
        }
        out.push(Isometry::new(m).map_err(|e| parse_err(format!("element {i}: {e}")))?);
    }
    Ok(out)
}

/// Writes elements as flat row-major `[re, im]` lists.
pub fn elements_to_json(elements: &[Isometry]) -> String {
    let list: Vec<Value> = elements
        .iter()
        .map(|g| {
            let m = g.matrix();
            let mut flat = Vec::new();
            for r in 0..m.nrows() {
                for c in 0..m.ncols() {
                    flat.push(json!([m[(r, c)].re, m[(r, c)].im]));
                }
            }
            Value::Array(flat)
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "elements": list })).expect("serializable")
}
