//! Deterministic graph export: DOT and JSON, byte-stable across runs.

use crate::graph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

/// DOT: isolated vertices declared explicitly, edges as label pairs sorted
/// lexicographically.
pub fn export_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    let quote = |s: &str| format!("\"{}\"", s.replace('"', "\\\""));
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {};\n", quote(g.label(v))));
        }
    }
    let mut lines: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = if g.label(u) <= g.label(v) {
                (g.label(u), g.label(v))
            } else {
                (g.label(v), g.label(u))
            };
            format!("  {} -- {};\n", quote(a), quote(b))
        })
        .collect();
    lines.sort();
    for l in lines {
        out.push_str(&l);
    }
    out.push_str("}\n");
    out
}

/// JSON: `{"vertices": [labels], "edges": [[i, j], ...]}` with `i < j`,
/// edges sorted.
pub fn export_json(g: &Graph) -> String {
    #[derive(Serialize)]
    struct GraphJson<'a> {
        vertices: &'a [String],
        edges: Vec<(usize, usize)>,
    }
    let gj = GraphJson {
        vertices: g.labels(),
        edges: g.edges(),
    };
    let mut s = serde_json::to_string(&gj).expect("serializable");
    s.push('\n');
    s
}

pub fn export_graph(g: &Graph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => export_dot(g),
        ExportFormat::Json => export_json(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::annihilator_graph;
    use crate::ring::make_zn;

    #[test]
    fn dot_of_a_single_edge() {
        let g = Graph::from_edges(vec!["a".into(), "b".into()], &[(0, 1)]);
        assert_eq!(export_dot(&g), "graph {\n  \"a\" -- \"b\";\n}\n");
    }

    #[test]
    fn dot_of_an_isolated_vertex() {
        let r = make_zn(4).unwrap();
        let g = annihilator_graph(&r).unwrap();
        assert_eq!(export_dot(&g), "graph {\n  \"2\";\n}\n");
    }

    #[test]
    fn dot_of_ag_z6_sorted() {
        let r = make_zn(6).unwrap();
        let g = annihilator_graph(&r).unwrap();
        assert_eq!(
            export_dot(&g),
            "graph {\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n}\n"
        );
    }

    #[test]
    fn json_is_deterministic() {
        let r = make_zn(6).unwrap();
        let g = annihilator_graph(&r).unwrap();
        let a = export_json(&g);
        let b = export_json(&g);
        assert_eq!(a, b);
        assert_eq!(
            a,
            "{\"vertices\":[\"2\",\"3\",\"4\"],\"edges\":[[0,1],[1,2]]}\n"
        );
    }
}
