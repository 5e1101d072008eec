//! Browser demo: three operations exported through `wasm-bindgen`.
//!
//! Each export takes code text (compact `{12,23,1,3,0}` or JSON) and returns
//! a JSON string, or throws a string describing the input error. The plain
//! Rust functions behind the exports are tested natively.

use codecat::code::{parse_code, Code};
use codecat::constructions::{
    coproduct, is_intersection_complete, is_max_intersection_complete, product,
};
use codecat::reduction::{canonical_form, reduce};
use codecat::topology::local_obstruction_report;
use codecat::trunks::{all_trunks, irreducible_trunks, Trunk};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn parse(text: &str) -> Result<Code, String> {
    parse_code(text).map_err(|e| e.to_string())
}

fn trunk_rows(code: &Code, trunks: &[Trunk]) -> Value {
    trunks
        .iter()
        .map(|t| {
            let words: Vec<String> = t.words(code).map(|w| w.to_string()).collect();
            json!({
                "generator": t.generator().map(|g| g.to_string()),
                "words": words,
            })
        })
        .collect()
}

/// Normal form, reduction, canonical form and trunks of a code.
pub fn analyze(text: &str) -> Result<Value, String> {
    let code = parse(text)?;
    let reduction = reduce(&code);
    let canonical = canonical_form(&code);
    Ok(json!({
        "code": code.to_string(),
        "neurons": code.n(),
        "words": code.len(),
        "reduced": reduction.reduced.to_string(),
        "minimum_neurons": reduction.reduced.n(),
        "canonical": canonical.code.to_string(),
        "canonical_witness": canonical.witness.to_one_based(),
        "intersection_complete": is_intersection_complete(&code),
        "max_intersection_complete": is_max_intersection_complete(&code),
        "trunks": trunk_rows(&code, &all_trunks(&code)),
        "irreducible_trunks": trunk_rows(&code, &irreducible_trunks(&code)),
    }))
}

/// Links of the missing faces of the code's simplicial complex.
pub fn obstructions(text: &str) -> Result<Value, String> {
    let code = parse(text)?;
    let report = local_obstruction_report(&code).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = report
        .missing
        .iter()
        .map(|l| {
            let facets: Vec<String> = l.link_facets.iter().map(|f| f.to_string()).collect();
            json!({
                "sigma": l.sigma.to_string(),
                "link_facets": facets,
                "collapsible": l.collapsible,
                "betti": l.betti,
                "verdict": l.verdict,
            })
        })
        .collect();
    Ok(json!({
        "missing": rows,
        "locally_great": report.locally_great,
        "locally_good": report.locally_good,
    }))
}

/// `op` is `"product"`, `"coproduct"` or `"coproduct0"` (with the empty word).
pub fn combine(a: &str, b: &str, op: &str) -> Result<Value, String> {
    let (a, b) = (parse(a)?, parse(b)?);
    let code = match op {
        "product" => product(&a, &b),
        "coproduct" => coproduct(&a, &b, false),
        "coproduct0" => coproduct(&a, &b, true),
        other => return Err(format!("unknown operation {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(json!({
        "code": code.to_string(),
        "neurons": code.n(),
        "words": code.len(),
        "minimum_neurons": reduce(&code).reduced.n(),
    }))
}

fn export(result: Result<Value, String>) -> Result<String, JsValue> {
    result
        .map(|v| v.to_string())
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze_code(text: &str) -> Result<String, JsValue> {
    export(analyze(text))
}

#[wasm_bindgen]
pub fn local_obstructions(text: &str) -> Result<String, JsValue> {
    export(obstructions(text))
}

#[wasm_bindgen]
pub fn combine_codes(a: &str, b: &str, op: &str) -> Result<String, JsValue> {
    export(combine(a, b, op))
}
