//! JSON and DOT renderings of enumerated crystals.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::crystal::CrystalGraph;

/// `{"layers": [[mp, …], …], "edges": [[src, i, dst], …]}`; `edges` is
/// omitted when the graph was enumerated without edges.
pub fn crystal_json(graph: &CrystalGraph) -> Value {
    let layers = serde_json::to_value(&graph.layers).expect("multipartitions serialize");
    match &graph.edges {
        Some(edges) => {
            let edges: Vec<Value> = edges.iter().map(|e| json!([e.src, e.residue, e.dst])).collect();
            json!({ "layers": layers, "edges": edges })
        }
        None => json!({ "layers": layers }),
    }
}

/// Graphviz digraph with one node per vertex (labelled in compact notation)
/// and one edge per crystal arrow (labelled by residue).
pub fn crystal_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=plaintext];\n");
    for (k, layer) in graph.layers.iter().enumerate() {
        let offset = graph.layer_offset(k);
        let _ = write!(out, "  {{ rank=same;");
        for j in 0..layer.len() {
            let _ = write!(out, " v{};", offset + j);
        }
        out.push_str(" }\n");
        for (j, mp) in layer.iter().enumerate() {
            let _ = writeln!(out, "  v{} [label=\"{}\"];", offset + j, mp);
        }
    }
    for e in graph.edges.iter().flatten() {
        let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.src, e.dst, e.residue);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{enumerate, EnumerateOptions, NodeOrder};
    use crate::partitions::{Modulus, Multicharge};

    fn graph(with_edges: bool) -> CrystalGraph {
        let s = Multicharge::new(vec![0, 1], Modulus::Finite(2)).unwrap();
        let opts = EnumerateOptions {
            with_edges,
            ..Default::default()
        };
        enumerate(&NodeOrder::uglov(s), 2, opts).unwrap()
    }

    #[test]
    fn json_shape() {
        let g = graph(true);
        let v = crystal_json(&g);
        assert_eq!(v["layers"][0], json!([[[], []]]));
        assert_eq!(v["layers"].as_array().unwrap().len(), 3);
        let edges = v["edges"].as_array().unwrap();
        assert_eq!(edges.len(), g.edges.as_ref().unwrap().len());
        assert!(crystal_json(&graph(false)).get("edges").is_none());
    }

    #[test]
    fn dot_shape() {
        let g = graph(true);
        let dot = crystal_dot(&g);
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("v0 [label=\"(∅,∅)\"];"));
        assert_eq!(dot.matches(" -> ").count(), g.edges.as_ref().unwrap().len());
        assert_eq!(dot.matches("[label=\"(").count(), g.vertex_count());
    }
}
