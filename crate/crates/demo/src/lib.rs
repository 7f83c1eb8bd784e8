//! wasm-bindgen surface for the static page in `www/`.

use chevalley_core::chevalley::scalar_multiply_general;
use chevalley_core::heisenberg::BasisClass;
use chevalley_core::parse::{parse_affine, parse_elt, parse_weight};
use chevalley_core::qbg::Qbg;
use chevalley_core::walks::{enumerate_decorations, enumerate_quantum_walks};
use chevalley_core::weyl::group_order;
use chevalley_core::{AffineWeylElt, MinusculeDatum, RootSystem};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest group drawn as a graph in the page.
pub const MAX_DRAWN: u64 = 120;

fn err(e: impl ToString) -> String {
    e.to_string()
}

/// `e^λ · [O(w t_ξ)]` as display lines.
pub fn expand_lines(cartan: &str, weight: &str, elt: &str) -> Result<Value, String> {
    let rs = RootSystem::from_name(cartan).map_err(err)?;
    let lambda = parse_weight(&rs, weight).map_err(err)?;
    let x = parse_affine(&rs, elt).map_err(err)?;
    let input = BasisClass::basis(x.w.clone(), x.xi.clone(), rs.zero_weight());
    let out = scalar_multiply_general(&rs, &lambda, &input).map_err(err)?;
    Ok(json!({
        "input": x.display(&rs),
        "terms": out.display(&rs).lines().collect::<Vec<_>>(),
        "count": out.len(),
    }))
}

/// Nodes (word, length) and edges of the quantum Bruhat graph.
pub fn graph(cartan: &str) -> Result<Value, String> {
    let rs = RootSystem::from_name(cartan).map_err(err)?;
    if group_order(&rs) > MAX_DRAWN {
        return Err(format!("{cartan} has {} elements; the page draws at most {MAX_DRAWN}", group_order(&rs)));
    }
    let g = Qbg::new(&rs).map_err(err)?;
    let mut nodes = std::collections::BTreeMap::new();
    let edges: Vec<Value> = g
        .edges()
        .into_iter()
        .map(|e| {
            nodes.insert(e.source.word_string(&rs), e.source.length());
            nodes.insert(e.target.word_string(&rs), e.target.length());
            json!({
                "source": e.source.word_string(&rs),
                "target": e.target.word_string(&rs),
                "label": e.label.to_string(),
                "kind": e.kind.as_str(),
            })
        })
        .collect();
    let nodes: Vec<Value> = nodes.into_iter().map(|(w, l)| json!({ "word": w, "length": l })).collect();
    Ok(json!({ "nodes": nodes, "edges": edges }))
}

/// Quantum walks from `w` with their vertices and decorations.
pub fn walk_list(cartan: &str, weight: &str, elt: &str) -> Result<Value, String> {
    let rs = RootSystem::from_name(cartan).map_err(err)?;
    let lambda = parse_weight(&rs, weight).map_err(err)?;
    let d = MinusculeDatum::new(&rs, &lambda).map_err(err)?;
    let w = parse_elt(&rs, elt).map_err(err)?;
    let mut out = Vec::new();
    for walk in enumerate_quantum_walks(&rs, &d, &w) {
        let decs = enumerate_decorations(&rs, &walk).map_err(err)?;
        out.push(json!({
            "steps": walk.steps_string(),
            "vertices": walk.vertices.iter().map(|v| v.word_string(&rs)).collect::<Vec<_>>(),
            "decorations": decs.iter().map(|dw| json!({
                "sign": dw.sign,
                "deg": dw.deg,
                "class": format!(
                    "[O({})({})]",
                    AffineWeylElt::new(&rs, walk.end().clone(), dw.translation(&rs)).map(|x| x.display(&rs)).unwrap_or_default(),
                    dw.bundle(&rs)
                ),
            })).collect::<Vec<_>>(),
        }));
    }
    Ok(json!({ "eta": d.eta().iter().map(|r| r.to_string()).collect::<Vec<_>>(), "walks": out }))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn expand(cartan: &str, weight: &str, elt: &str) -> Result<String, JsError> {
    to_js(expand_lines(cartan, weight, elt))
}

#[wasm_bindgen]
pub fn qbg(cartan: &str) -> Result<String, JsError> {
    to_js(graph(cartan))
}

#[wasm_bindgen]
pub fn walks(cartan: &str, weight: &str, elt: &str) -> Result<String, JsError> {
    to_js(walk_list(cartan, weight, elt))
}
