//! Shared helpers for the benchmark targets.

use annigraph_core::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let labels = (0..n).map(|i| i.to_string()).collect();
    let mut g = Graph::new(labels);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j);
        }
    }
    g
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let labels = (0..m + n).map(|i| i.to_string()).collect();
    let mut g = Graph::new(labels);
    for i in 0..m {
        for j in 0..n {
            g.add_edge(i, m + j);
        }
    }
    g
}
