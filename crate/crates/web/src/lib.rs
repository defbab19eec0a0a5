//! Browser demo: draw `H_n`, click a vertex for its exact degree
//! distribution, and draw uniform random spanning trees.
//!
//! Every export returns a JSON string. The `*_json` functions are plain Rust
//! so they can be tested off the browser.

use hanoi_trees::count::count_recursive;
use hanoi_trees::degree::vertex_distribution;
use hanoi_trees::exact::approx_f64;
use hanoi_trees::sampler::sample_tree;
use hanoi_trees::{HanoiGraph, VertexLabel};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest level the page will draw.
pub const MAX_DRAW_LEVEL: u32 = 7;
/// Shrink factor between a copy and its parent in the drawing.
const SCALE: f64 = 0.45;
const CORNERS: [(f64, f64); 3] = [
    (0.5, 0.0),
    (0.0, 0.866_025_403_784_438_6),
    (1.0, 0.866_025_403_784_438_6),
];

#[derive(Serialize)]
struct Vertex {
    label: String,
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct Layout {
    n: u32,
    spanning_trees: String,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct Row {
    i: usize,
    exact: String,
    value: f64,
}

#[derive(Serialize)]
struct DegreeView {
    n: u32,
    vertex: String,
    rows: Vec<Row>,
    expected_degree: f64,
}

#[derive(Serialize)]
struct TreeView {
    n: u32,
    seed: u64,
    edges: Vec<(usize, usize)>,
}

fn graph(n: u32) -> Result<HanoiGraph, String> {
    if n > MAX_DRAW_LEVEL {
        return Err(format!("the demo draws levels up to {MAX_DRAW_LEVEL}"));
    }
    HanoiGraph::build(n).map_err(|e| e.to_string())
}

/// Each raw digit picks a corner of a triangle shrunk by `SCALE` per level.
fn position(label: &VertexLabel, n: u32) -> (f64, f64) {
    let d = label.digits();
    let (mut x, mut y, mut w) = (0.0, 0.0, 1.0);
    for k in 0..n as usize {
        let peg = *d.get(k).unwrap_or(d.last().unwrap()) as usize;
        let share = if k + 1 == n as usize {
            w
        } else {
            w * (1.0 - SCALE)
        };
        x += share * CORNERS[peg].0;
        y += share * CORNERS[peg].1;
        w *= SCALE;
    }
    (x, y)
}

pub fn layout_json(n: u32) -> Result<String, String> {
    let g = graph(n)?;
    let vertices = g
        .labels()
        .iter()
        .map(|l| {
            let (x, y) = position(l, n);
            Vertex {
                label: l.to_string(),
                x,
                y,
            }
        })
        .collect();
    let s = count_recursive(n).map_err(|e| e.to_string())?.s;
    let view = Layout {
        n,
        spanning_trees: s.to_string(),
        vertices,
        edges: g.edges().to_vec(),
    };
    Ok(serde_json::to_string(&view).unwrap())
}

pub fn degree_json(n: u32, label: &str) -> Result<String, String> {
    let label: VertexLabel = label
        .parse()
        .map_err(|e: hanoi_trees::Error| e.to_string())?;
    let d = vertex_distribution(n, &label).map_err(|e| e.to_string())?;
    let rows = d
        .tree_probabilities()
        .iter()
        .enumerate()
        .map(|(i, p)| Row {
            i,
            exact: p.to_string(),
            value: approx_f64(p),
        })
        .collect();
    let view = DegreeView {
        n,
        vertex: label.to_string(),
        rows,
        expected_degree: approx_f64(&d.expected_tree_degree()),
    };
    Ok(serde_json::to_string(&view).unwrap())
}

pub fn tree_json(n: u32, seed: u64) -> Result<String, String> {
    let g = graph(n)?;
    let view = TreeView {
        n,
        seed,
        edges: sample_tree(&g, seed),
    };
    Ok(serde_json::to_string(&view).unwrap())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Vertex positions, edges and the spanning-tree count of `H_n`.
#[wasm_bindgen]
pub fn layout(n: u32) -> Result<String, JsError> {
    js(layout_json(n))
}

/// Exact spanning-tree degree distribution of one vertex.
#[wasm_bindgen]
pub fn degree(n: u32, label: &str) -> Result<String, JsError> {
    js(degree_json(n, label))
}

/// A uniform spanning tree as vertex-index pairs matching `layout`.
#[wasm_bindgen]
pub fn random_tree(n: u32, seed: u64) -> Result<String, JsError> {
    js(tree_json(n, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn corners_sit_on_the_triangle() {
        let v: Value = serde_json::from_str(&layout_json(3).unwrap()).unwrap();
        let verts = v["vertices"].as_array().unwrap();
        assert_eq!(verts.len(), 27);
        assert_eq!(v["edges"].as_array().unwrap().len(), 39);
        assert_eq!(v["spanning_trees"], "20503125");
        let c0 = verts.iter().find(|x| x["label"] == "0").unwrap();
        assert!((c0["x"].as_f64().unwrap() - 0.5).abs() < 1e-12);
        assert!(c0["y"].as_f64().unwrap().abs() < 1e-12);
    }

    #[test]
    fn degree_view() {
        let v: Value = serde_json::from_str(&degree_json(2, "01").unwrap()).unwrap();
        assert_eq!(v["rows"][2]["exact"], "26/45");
        assert!(degree_json(2, "0120").is_err());
    }

    #[test]
    fn tree_view() {
        let v: Value = serde_json::from_str(&tree_json(3, 4).unwrap()).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 26);
        assert!(tree_json(MAX_DRAW_LEVEL + 1, 0).is_err());
    }
}
