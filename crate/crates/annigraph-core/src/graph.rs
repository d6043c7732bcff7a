//! Simple undirected labeled graphs, the annihilator graph `AG(R)`, the
//! classical zero-divisor graph, and the structural shape recognizers.

use serde::Serialize;
use thiserror::Error;

use crate::ring::{element_classes, RingObject};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GraphError {
    #[error("the ring has no nonzero zero-divisor, so the graph is empty")]
    NoZeroDivisors,
    #[error("edge criteria need two distinct nonzero zero-divisors")]
    InvalidVertexPair,
}

/// Simple undirected graph with distinct vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            adj: vec![vec![false; n]; n],
        }
    }

    /// Builds a graph from labels and an edge list.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(labels);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "no self-loops");
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u][v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.adj[v][u]).collect()
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.adj[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.adj[i][j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The subgraph induced by `keep` (vertices renumbered in `keep` order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Graph::new(labels);
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.adj[u][v] {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.labels.clone());
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if !self.adj[i][j] {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in 0..n {
                    if self.adj[v][u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Renames vertex `v` of `self` to `perm[v]` and returns the permuted
    /// graph.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        let mut g = Graph::new(labels);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// Annihilator bitsets for every ring element, for fast edge tests.
struct AnnTable {
    words: usize,
    sets: Vec<Vec<u64>>,
}

impl AnnTable {
    fn build(ring: &RingObject) -> AnnTable {
        let n = ring.order();
        let zero = ring.zero();
        let words = n.div_ceil(64);
        let mut sets = vec![vec![0u64; words]; n];
        for x in 0..n {
            for r in 0..n {
                if ring.mul(r, x) == zero {
                    sets[x][r / 64] |= 1 << (r % 64);
                }
            }
        }
        AnnTable { words, sets }
    }

    /// `ann(p) != ann(x) ∪ ann(y)`
    fn union_differs(&self, p: usize, x: usize, y: usize) -> bool {
        (0..self.words).any(|w| self.sets[p][w] != (self.sets[x][w] | self.sets[y][w]))
    }
}

fn vertex_set(ring: &RingObject) -> Result<Vec<usize>, GraphError> {
    let classes = element_classes(ring);
    let verts = classes.nonzero_zero_divisors(ring);
    if verts.is_empty() {
        return Err(GraphError::NoZeroDivisors);
    }
    Ok(verts)
}

/// `AG(R)`: vertices are the nonzero zero-divisors, `x ~ y` iff
/// `ann(xy) != ann(x) ∪ ann(y)`, computed literally from annihilator sets.
pub fn annihilator_graph(ring: &RingObject) -> Result<Graph, GraphError> {
    let verts = vertex_set(ring)?;
    let ann = AnnTable::build(ring);
    let labels = verts.iter().map(|&v| ring.label(v)).collect();
    let mut g = Graph::new(labels);
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let p = ring.mul(verts[i], verts[j]);
            if ann.union_differs(p, verts[i], verts[j]) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The classical zero-divisor graph: `x ~ y` iff `xy = 0`. Always a subgraph
/// of `AG(R)` on the same vertex set.
pub fn zero_divisor_graph(ring: &RingObject) -> Result<Graph, GraphError> {
    let verts = vertex_set(ring)?;
    let zero = ring.zero();
    let labels = verts.iter().map(|&v| ring.label(v)).collect();
    let mut g = Graph::new(labels);
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if ring.mul(verts[i], verts[j]) == zero {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The three edge criteria, each evaluated from its own definition so their
/// equivalence can be tested rather than assumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCriteria {
    /// `ann(xy) != ann(x) ∪ ann(y)`
    pub def_edge: bool,
    /// `Rx ∩ ann(y) != 0` and `Ry ∩ ann(x) != 0`
    pub ideal_edge: bool,
    /// `x ∈ Z(Ry)` and `y ∈ Z(Rx)`
    pub module_edge: bool,
}

pub fn edge_criteria(ring: &RingObject, x: usize, y: usize) -> Result<EdgeCriteria, GraphError> {
    let n = ring.order();
    let zero = ring.zero();
    if x == y || x >= n || y >= n {
        return Err(GraphError::InvalidVertexPair);
    }
    let is_nonzero_zd = |a: usize| a != zero && (0..n).any(|b| b != zero && ring.mul(a, b) == zero);
    if !is_nonzero_zd(x) || !is_nonzero_zd(y) {
        return Err(GraphError::InvalidVertexPair);
    }

    // definition: ann(xy) vs ann(x) ∪ ann(y), from scratch
    let def_edge = {
        let p = ring.mul(x, y);
        let ann = |a: usize| -> Vec<bool> { (0..n).map(|r| ring.mul(r, a) == zero).collect() };
        let ap = ann(p);
        let ax = ann(x);
        let ay = ann(y);
        (0..n).any(|r| ap[r] != (ax[r] || ay[r]))
    };

    // ideal form: Rx ∩ ann(y) and Ry ∩ ann(x) both nonzero
    let ideal_edge = {
        let hits = |a: usize, b: usize| {
            (0..n).any(|r| {
                let ra = ring.mul(r, a);
                ra != zero && ring.mul(ra, b) == zero
            })
        };
        hits(x, y) && hits(y, x)
    };

    // module form: x kills a nonzero element of Ry, and symmetrically
    let module_edge = {
        let in_z_of = |a: usize, b: usize| {
            (0..n).any(|r| {
                let rb = ring.mul(r, b);
                rb != zero && ring.mul(a, rb) == zero
            })
        };
        in_z_of(x, y) && in_z_of(y, x)
    };

    Ok(EdgeCriteria {
        def_edge,
        ideal_edge,
        module_edge,
    })
}

/// Structural shape report: completeness, the unique complete bipartition
/// when one exists, and the join decomposition read off the complement's
/// components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub complete: bool,
    pub complete_bipartite: Option<(Vec<usize>, Vec<usize>)>,
    /// Complement components when there are at least two: `G` is the join of
    /// the subgraphs they induce.
    pub join_parts: Option<Vec<Vec<usize>>>,
}

pub fn recognize_shape(g: &Graph) -> ShapeReport {
    let n = g.n();
    let complete = g.edge_count() == n * (n - 1) / 2;
    let comp = g.complement();
    let parts = comp.components();
    let join_parts = (parts.len() >= 2).then(|| parts.clone());
    let complete_bipartite = if parts.len() == 2 {
        let independent = |part: &[usize]| {
            part.iter()
                .enumerate()
                .all(|(i, &u)| part[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        };
        if independent(&parts[0]) && independent(&parts[1]) {
            let (a, b) = (parts[0].clone(), parts[1].clone());
            Some(if a.len() <= b.len() { (a, b) } else { (b, a) })
        } else {
            None
        }
    } else {
        None
    };
    ShapeReport {
        complete,
        complete_bipartite,
        join_parts,
    }
}

/// Order, size, degree sequence, girth, per-component diameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub order: usize,
    pub size: usize,
    /// Descending.
    pub degree_sequence: Vec<usize>,
    /// `None` when the graph is a forest.
    pub girth: Option<usize>,
    pub components: usize,
    /// One diameter per component, in component order (by smallest vertex).
    pub diameters: Vec<usize>,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let n = g.n();
    let mut degree_sequence: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));

    let girth = compute_girth(g);

    let comps = g.components();
    let mut diameters = Vec::new();
    for comp in &comps {
        let mut diam = 0;
        for &s in comp {
            let dist = bfs_dist(g, s);
            for &v in comp {
                diam = diam.max(dist[v].expect("same component"));
            }
        }
        diameters.push(diam);
    }

    GraphStats {
        order: n,
        size: g.edge_count(),
        degree_sequence,
        girth,
        components: comps.len(),
        diameters,
    }
}

fn bfs_dist(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let n = g.n();
    let mut dist = vec![None; n];
    dist[s] = Some(0);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Shortest cycle length via a BFS from every vertex.
pub fn compute_girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    let len = dist[v] + dist[u] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_gf, make_product, make_zn};

    fn k(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut g = Graph::new(labels);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    fn path(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut g = Graph::new(labels);
        for i in 0..n - 1 {
            g.add_edge(i, i + 1);
        }
        g
    }

    #[test]
    fn ag_of_z6_is_the_path_2_3_4() {
        let r = make_zn(6).unwrap();
        let g = annihilator_graph(&r).unwrap();
        assert_eq!(g.labels(), &["2".to_string(), "3".into(), "4".into()]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let zg = zero_divisor_graph(&r).unwrap();
        assert_eq!(zg.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn ag_of_z49_is_complete_on_six_vertices() {
        let r = make_zn(49).unwrap();
        let g = annihilator_graph(&r).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 15);
        assert!(recognize_shape(&g).complete);
    }

    #[test]
    fn ag_of_z4_is_one_isolated_vertex() {
        let r = make_zn(4).unwrap();
        let g = annihilator_graph(&r).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.label(0), "2");
    }

    #[test]
    fn zero_divisor_graph_small_cases() {
        let g = zero_divisor_graph(&make_zn(4).unwrap()).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.label(0), "2");

        let r = make_product(vec![make_zn(2).unwrap(), make_zn(2).unwrap()]).unwrap();
        let g = zero_divisor_graph(&r).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn fields_have_no_graph() {
        let r = make_zn(7).unwrap();
        assert_eq!(
            annihilator_graph(&r).unwrap_err(),
            GraphError::NoZeroDivisors
        );
    }

    #[test]
    fn edge_criteria_examples() {
        let z6 = make_zn(6).unwrap();
        let c = edge_criteria(&z6, 2, 3).unwrap();
        assert_eq!(
            c,
            EdgeCriteria {
                def_edge: true,
                ideal_edge: true,
                module_edge: true
            }
        );
        let c = edge_criteria(&z6, 2, 4).unwrap();
        assert!(!c.def_edge && !c.ideal_edge && !c.module_edge);

        let z16 = make_zn(16).unwrap();
        let c = edge_criteria(&z16, 2, 4).unwrap();
        assert!(c.def_edge && c.ideal_edge && c.module_edge);

        assert_eq!(
            edge_criteria(&z6, 2, 2).unwrap_err(),
            GraphError::InvalidVertexPair
        );
        assert_eq!(
            edge_criteria(&z6, 1, 2).unwrap_err(),
            GraphError::InvalidVertexPair
        );
    }

    #[test]
    fn shapes_of_field_products() {
        // AG(GF(4) x GF(4)) is complete bipartite K_{3,3}
        let r = make_product(vec![
            make_gf(2, 2, None).unwrap(),
            make_gf(2, 2, None).unwrap(),
        ])
        .unwrap();
        let g = annihilator_graph(&r).unwrap();
        assert_eq!(g.n(), 6);
        let shape = recognize_shape(&g);
        let (a, b) = shape.complete_bipartite.expect("bipartite");
        assert_eq!((a.len(), b.len()), (3, 3));
        assert!(!shape.complete);

        // AG(Z2 x GF(4)) is the star K_{1,3}
        let r = make_product(vec![make_zn(2).unwrap(), make_gf(2, 2, None).unwrap()]).unwrap();
        let g = annihilator_graph(&r).unwrap();
        let shape = recognize_shape(&g);
        let (a, b) = shape.complete_bipartite.expect("bipartite");
        assert_eq!((a.len(), b.len()), (1, 3));
        assert_eq!(g.label(a[0]), "(1,0)");
        // join decomposition exists: K1 joined with three isolated vertices
        assert_eq!(shape.join_parts.expect("join").len(), 2);
    }

    #[test]
    fn stats_examples() {
        let s = graph_stats(&k(4));
        assert_eq!((s.order, s.size), (4, 6));
        assert_eq!(s.girth, Some(3));
        assert_eq!(s.diameters, vec![1]);

        let s = graph_stats(&path(3));
        assert_eq!(s.girth, None);
        assert_eq!(s.diameters, vec![2]);

        let r = make_product(vec![
            make_zn(2).unwrap(),
            make_zn(2).unwrap(),
            make_zn(3).unwrap(),
        ])
        .unwrap();
        let g = annihilator_graph(&r).unwrap();
        assert_eq!(graph_stats(&g).order, 9);
    }

    #[test]
    fn zero_divisor_graph_is_subgraph_of_ag() {
        for n in [6u64, 8, 12, 16, 24, 30] {
            let r = make_zn(n).unwrap();
            let ag = annihilator_graph(&r).unwrap();
            let zg = zero_divisor_graph(&r).unwrap();
            for (u, v) in zg.edges() {
                assert!(ag.has_edge(u, v), "Z_{n}: edge {u}-{v}");
            }
        }
    }
}
