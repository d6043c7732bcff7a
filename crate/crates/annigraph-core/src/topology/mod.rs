//! Planarity with certificates and exact orientable genus.
//!
//! Genus is computed by backtracking over rotation systems with incremental
//! face tracing: a rotation system determines an embedding whose face count
//! gives the genus through Euler's relation `V - E + F = 2 - 2g`. The search
//! is exact: it either returns an embedding witness achieving the genus, or
//! has exhaustively refuted every smaller genus. Budgets turn into an
//! explicit `Exhausted` outcome, never a wrong answer.
//!
//! Preprocessing uses the standard genus-preserving reductions: isolated and
//! pendant vertices, suppression of degree-2 vertices, and additivity of
//! genus over connected components and biconnected blocks.

mod reduce;
mod search;
mod subdivision;

pub use subdivision::{
    find_subdivision, find_subdivision_rooted, validate_subdivision, SubdivisionOutcome,
    SubdivisionWitness,
};

use crate::graph::{compute_girth, Graph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum TopologyError {
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("face tracing requires a connected graph")]
    NotConnected,
}

/// A cyclic order of neighbors at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationSystem {
    pub cyclic: Vec<Vec<usize>>,
}

/// An embedding: its genus, the rotation system realizing it, and the face
/// count. For a connected graph `V - E + F = 2 - 2g`; for a disconnected one
/// the relation holds per component and the genus is the sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingResult {
    pub genus: usize,
    pub rotation: RotationSystem,
    pub faces: usize,
}

/// Why a graph is planar or is not.
#[derive(Debug, Clone)]
pub enum Certificate {
    PlanarEmbedding(RotationSystem),
    Kuratowski(SubdivisionWitness),
}

/// Complete and complete bipartite targets, used by the closed-form genus
/// oracle and the subdivision finder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompleteTarget {
    /// `K_n`
    Kn(usize),
    /// `K_{m,n}`
    Kmn(usize, usize),
}

/// Search budget. The node limit counts rotation-slot decisions across the
/// whole call.
#[derive(Debug, Clone, Copy)]
pub struct GenusBudget {
    pub max_genus: usize,
    pub node_limit: u64,
}

impl Default for GenusBudget {
    fn default() -> Self {
        GenusBudget {
            max_genus: 3,
            node_limit: 50_000_000,
        }
    }
}

/// Outcome of an exact genus computation.
#[derive(Debug, Clone)]
pub enum MinGenusOutcome {
    /// Exact genus with a witness embedding.
    Exact(EmbeddingResult),
    /// Every genus up to and including `max_genus` was exhaustively refuted.
    ExceedsMax { max_genus: usize },
    /// The node budget ran out; `genus_at_least` is the largest refuted
    /// genus plus one.
    Exhausted { nodes: u64, genus_at_least: usize },
}

impl MinGenusOutcome {
    pub fn exact_genus(&self) -> Option<usize> {
        match self {
            MinGenusOutcome::Exact(e) => Some(e.genus),
            _ => None,
        }
    }
}

/// Closed-form genus of complete and complete bipartite graphs.
pub fn closed_form_genus(target: CompleteTarget) -> usize {
    match target {
        CompleteTarget::Kn(n) => {
            if n < 4 {
                0
            } else {
                (n - 3) * (n - 4) / 12 + usize::from((n - 3) * (n - 4) % 12 != 0)
            }
        }
        CompleteTarget::Kmn(m, n) => {
            if m < 2 || n < 2 {
                0
            } else {
                (m - 2) * (n - 2) / 4 + usize::from((m - 2) * (n - 2) % 4 != 0)
            }
        }
    }
}

/// Euler-formula lower bound with girth: for a connected graph with a cycle,
/// `g >= ceil((E(1 - 2/girth) - V + 2) / 2)`; forests contribute 0.
/// Disconnected graphs sum the per-component bounds.
pub fn genus_lower_bound(g: &Graph) -> usize {
    let mut total = 0;
    for comp in g.components() {
        let sub = g.induced(&comp);
        total += component_lower_bound(&sub);
    }
    total
}

fn component_lower_bound(g: &Graph) -> usize {
    let v = g.n();
    let e = g.edge_count();
    if e < v {
        return 0; // forest (connected with E = V - 1 or less)
    }
    let girth = match compute_girth(g) {
        Some(gg) => gg as i64,
        None => return 0,
    };
    let e = e as i64;
    let v = v as i64;
    // ceil((e*(girth-2) - girth*(v - 2)) / (2*girth))
    let num = e * (girth - 2) - girth * (v - 2);
    if num <= 0 {
        0
    } else {
        (num + 2 * girth - 1) as usize / (2 * girth) as usize
    }
}

/// Traces the faces of a connected graph under a rotation system and derives
/// the genus from Euler's relation.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<EmbeddingResult, TopologyError> {
    let n = g.n();
    if rot.cyclic.len() != n {
        return Err(TopologyError::InvalidRotation(
            "rotation has the wrong number of vertices".into(),
        ));
    }
    for v in 0..n {
        let mut expect = g.neighbors(v);
        let mut got = rot.cyclic[v].clone();
        expect.sort_unstable();
        got.sort_unstable();
        if expect != got {
            return Err(TopologyError::InvalidRotation(format!(
                "cycle at vertex {v} is not a permutation of its neighbors"
            )));
        }
    }
    if g.components().len() != 1 {
        return Err(TopologyError::NotConnected);
    }
    let e = g.edge_count();
    if e == 0 {
        // a lone vertex on the sphere
        return Ok(EmbeddingResult {
            genus: 0,
            rotation: rot.clone(),
            faces: 1,
        });
    }
    let faces = count_faces(g, rot);
    let euler = 2i64 - n as i64 + e as i64 - faces as i64;
    debug_assert!(euler >= 0 && euler % 2 == 0);
    Ok(EmbeddingResult {
        genus: (euler / 2) as usize,
        rotation: rot.clone(),
        faces,
    })
}

/// Number of orbits of the face-successor map: the dart `(u, v)` continues
/// to `(v, w)` where `w` follows `u` in the cyclic order at `v`.
pub(crate) fn count_faces(g: &Graph, rot: &RotationSystem) -> usize {
    let n = g.n();
    // position of each neighbor in each cycle
    let mut pos = vec![std::collections::HashMap::new(); n];
    for v in 0..n {
        for (i, &u) in rot.cyclic[v].iter().enumerate() {
            pos[v].insert(u, i);
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut faces = 0;
    for v in 0..n {
        for &u in &rot.cyclic[v] {
            let start = (v, u);
            if seen.contains(&start) {
                continue;
            }
            faces += 1;
            let mut dart = start;
            loop {
                seen.insert(dart);
                let (a, b) = dart;
                let i = pos[b][&a];
                let w = rot.cyclic[b][(i + 1) % rot.cyclic[b].len()];
                dart = (b, w);
                if dart == start {
                    break;
                }
            }
        }
    }
    faces
}

/// Exact orientable genus within a budget.
///
/// Isolated and pendant vertices are pruned, degree-2 vertices suppressed,
/// and the graph split into biconnected blocks; genus is additive over
/// blocks and components. Each block is solved by iterative deepening from
/// its Euler lower bound using the face-driven rotation search.
pub fn min_genus(g: &Graph, budget: GenusBudget) -> MinGenusOutcome {
    reduce::min_genus_reduced(g, budget)
}

/// Whole-graph rotation search without any preprocessing; for cross-checking
/// the reductions on small graphs.
pub fn min_genus_unreduced(g: &Graph, budget: GenusBudget) -> MinGenusOutcome {
    if g.components().len() != 1 {
        // additivity over components is part of the definition
        return reduce::min_genus_reduced(g, budget);
    }
    let mut nodes = 0u64;
    match search::block_genus(g, budget.max_genus, budget.node_limit, &mut nodes) {
        search::BlockOutcome::Exact { genus, rotation } => {
            let faces = count_faces(g, &rotation);
            MinGenusOutcome::Exact(EmbeddingResult {
                genus,
                rotation,
                faces,
            })
        }
        search::BlockOutcome::ExceedsMax => MinGenusOutcome::ExceedsMax {
            max_genus: budget.max_genus,
        },
        search::BlockOutcome::Exhausted { genus_at_least } => MinGenusOutcome::Exhausted {
            nodes,
            genus_at_least,
        },
    }
}

/// Planarity with an independently checkable certificate: a genus-0 rotation
/// system, or a subdivision of `K_5` or `K_{3,3}`.
pub fn is_planar(g: &Graph) -> (bool, Certificate) {
    let budget = GenusBudget {
        max_genus: 0,
        node_limit: u64::MAX,
    };
    match min_genus(g, budget) {
        MinGenusOutcome::Exact(e) if e.genus == 0 => {
            (true, Certificate::PlanarEmbedding(e.rotation))
        }
        _ => {
            for target in [CompleteTarget::Kmn(3, 3), CompleteTarget::Kn(5)] {
                if let SubdivisionOutcome::Found(w) = find_subdivision(g, target, u64::MAX) {
                    return (false, Certificate::Kuratowski(w));
                }
            }
            unreachable!("a nonplanar graph contains a K5 or K33 subdivision")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut g = Graph::new(labels);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    fn complete_bipartite(m: usize, n: usize) -> Graph {
        let labels = (0..m + n).map(|i| i.to_string()).collect();
        let mut g = Graph::new(labels);
        for i in 0..m {
            for j in 0..n {
                g.add_edge(i, m + j);
            }
        }
        g
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_genus(CompleteTarget::Kn(3)), 0);
        assert_eq!(closed_form_genus(CompleteTarget::Kn(4)), 0);
        assert_eq!(closed_form_genus(CompleteTarget::Kn(5)), 1);
        assert_eq!(closed_form_genus(CompleteTarget::Kn(7)), 1);
        assert_eq!(closed_form_genus(CompleteTarget::Kn(8)), 2);
        assert_eq!(closed_form_genus(CompleteTarget::Kmn(3, 3)), 1);
        assert_eq!(closed_form_genus(CompleteTarget::Kmn(4, 4)), 1);
        assert_eq!(closed_form_genus(CompleteTarget::Kmn(1, 10)), 0);
        assert_eq!(closed_form_genus(CompleteTarget::Kmn(5, 4)), 2);
        assert_eq!(closed_form_genus(CompleteTarget::Kmn(3, 7)), 2);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(genus_lower_bound(&complete(7)), 1);
        assert_eq!(genus_lower_bound(&complete_bipartite(3, 3)), 1);
        // trees
        let mut g = Graph::new((0..4).map(|i| i.to_string()).collect());
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(1, 3);
        assert_eq!(genus_lower_bound(&g), 0);
        // the bound matches the closed form on complete bipartite graphs
        for m in 2..=5 {
            for n in m..=6 {
                assert_eq!(
                    genus_lower_bound(&complete_bipartite(m, n)),
                    closed_form_genus(CompleteTarget::Kmn(m, n)),
                    "K_{{{m},{n}}}"
                );
            }
        }
    }

    #[test]
    fn face_tracing_triangle() {
        let g = complete(3);
        let rot = RotationSystem {
            cyclic: vec![vec![1, 2], vec![0, 2], vec![0, 1]],
        };
        let e = trace_faces(&g, &rot).unwrap();
        assert_eq!(e.faces, 2);
        assert_eq!(e.genus, 0);
    }

    #[test]
    fn face_tracing_k4_planar_rotation() {
        let g = complete(4);
        // the planar embedding of K4: outer triangle 1,2,3 with 0 inside
        let rot = RotationSystem {
            cyclic: vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        };
        let e = trace_faces(&g, &rot).unwrap();
        assert_eq!(e.faces, 4);
        assert_eq!(e.genus, 0);
    }

    #[test]
    fn face_tracing_rejects_bad_rotation() {
        let g = complete(3);
        let rot = RotationSystem {
            cyclic: vec![vec![1, 1], vec![0, 2], vec![0, 1]],
        };
        assert!(matches!(
            trace_faces(&g, &rot),
            Err(TopologyError::InvalidRotation(_))
        ));
    }

    #[test]
    fn paths_and_trees_are_planar() {
        let mut g = Graph::new((0..3).map(|i| i.to_string()).collect());
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        match min_genus(&g, GenusBudget::default()) {
            MinGenusOutcome::Exact(e) => {
                assert_eq!(e.genus, 0);
                assert_eq!(trace_faces(&g, &e.rotation).unwrap().genus, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k33_exhaustive_rotation_scan() {
        // independent oracle: all 2^6 rotation systems of K_{3,3}
        let g = complete_bipartite(3, 3);
        let mut best = usize::MAX;
        let mut genus_one_seen = false;
        for mask in 0u32..64 {
            let mut cyclic = Vec::new();
            for v in 0..6 {
                let nbrs = g.neighbors(v);
                let flip = mask >> v & 1 == 1;
                let mut cycle = nbrs.clone();
                if flip {
                    cycle.swap(1, 2);
                }
                cyclic.push(cycle);
            }
            let e = trace_faces(&g, &RotationSystem { cyclic }).unwrap();
            best = best.min(e.genus);
            if e.genus == 1 {
                genus_one_seen = true;
            }
        }
        assert_eq!(best, 1);
        assert!(genus_one_seen);
    }
}
