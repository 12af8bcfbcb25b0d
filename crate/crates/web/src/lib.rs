//! WebAssembly bindings for the browser demo. Each export wraps a plain
//! function returning `Result<String, String>` so the logic runs natively
//! in tests.

use hyperconn::chains::is_properly_connected;
use hyperconn::domination::{epsilon, k_bound};
use hyperconn::fixtures::{fixture, Fixture};
use hyperconn::homotopy::{homotopy_type_triangulated, max_dimension_bound};
use hyperconn::io::{emit_hypergraph_text, parse_hypergraph, Labels};
use hyperconn::psi::DEFAULT_PSI_BUDGET;
use hyperconn::{degree_bound, independence_complex, reduced_homology, PsiSolver};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn cell<T: ToString>(r: hyperconn::Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("n/a ({e})"),
    }
}

/// Drawing data and invariants of a hypergraph given as text or JSON.
pub fn analyze_text(input: &str) -> Result<String, String> {
    let h = parse_hypergraph(input).map_err(|e| e.to_string())?;
    let (c, labels) = (&h.value, &h.labels);
    let homology = independence_complex(c).and_then(|ind| reduced_homology(&ind));
    let betti = match &homology {
        Ok(p) => p
            .iter()
            .filter(|(_, g)| !g.is_zero())
            .map(|(d, g)| format!("H{d} = {g}"))
            .collect::<Vec<_>>()
            .join(", "),
        Err(e) => format!("n/a ({e})"),
    };
    let betti = if betti.is_empty() { "all zero".to_string() } else { betti };
    let psi = PsiSolver::new(DEFAULT_PSI_BUDGET).evaluate(c);
    let argmax = match &psi {
        Ok(out) => out.argmax.map_or("none".into(), |f| labels.format_set(f)),
        Err(_) => "n/a".into(),
    };
    let rows = vec![
        ("vertices", c.vertex_count().to_string()),
        ("edges", c.len().to_string()),
        ("reduced homology", betti),
        ("conn_h", cell(homology.map(|p| p.conn_h()))),
        ("psi", cell(psi.map(|o| o.value))),
        ("psi attained at", argmax),
        ("k", cell(k_bound(c))),
        ("epsilon", cell(epsilon(c))),
        ("degree bound", degree_bound(c).to_string()),
        ("properly-connected", cell(is_properly_connected(c))),
    ];
    let doc = json!({
        "vertices": c.vertices().iter().map(|v| labels.label(v).to_string()).collect::<Vec<_>>(),
        "edges": c.edges().iter()
            .map(|e| e.iter().map(|v| labels.label(v).to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "rows": rows,
    });
    Ok(doc.to_string())
}

/// Homotopy type of `Ind(C)` for a uniform, properly-connected,
/// triangulated hypergraph.
pub fn homotopy_text(input: &str) -> Result<String, String> {
    let c = parse_hypergraph(input).map_err(|e| e.to_string())?.value;
    let ty = homotopy_type_triangulated(&c).map_err(|e| e.to_string())?;
    let bound = max_dimension_bound(&c).map_err(|e| e.to_string())?;
    Ok(format!("Ind(C) ≃ {ty}\nsphere dimensions are at most (d-1)c-1 = {bound}"))
}

/// A built-in example in the text format.
pub fn fixture_source(name: &str) -> Result<String, String> {
    Ok(match fixture(name).map_err(|e| e.to_string())? {
        Fixture::Hypergraph(c) => emit_hypergraph_text(&c, &Labels::identity(c.vertices())),
        // A complex is offered through its minimal non-faces.
        Fixture::Complex(d) => {
            let c = d.minimal_nonfaces();
            emit_hypergraph_text(&c, &Labels::identity(c.vertices()))
        }
    })
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> Result<String, JsValue> {
    analyze_text(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn homotopy(input: &str) -> Result<String, JsValue> {
    homotopy_text(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn example(name: &str) -> Result<String, JsValue> {
    fixture_source(name).map_err(|e| JsValue::from_str(&e))
}
