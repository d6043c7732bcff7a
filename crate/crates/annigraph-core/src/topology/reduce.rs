//! Genus-preserving reductions and block decomposition.
//!
//! Genus is invariant under deleting isolated and pendant vertices and under
//! suppressing degree-2 vertices (deleting them outright when their two
//! neighbors are already adjacent, since a doubled edge never needs a
//! handle), and it is additive over connected components and biconnected
//! blocks. Each reduction is recorded so a witness rotation system for the
//! original graph can be rebuilt from the embeddings of the reduced blocks.

use super::search::{block_genus, BlockOutcome};
use super::{count_faces, EmbeddingResult, GenusBudget, MinGenusOutcome, RotationSystem};
use crate::graph::Graph;
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
enum ReduceOp {
    Isolated(usize),
    Leaf { v: usize, anchor: usize },
    Smooth { v: usize, a: usize, b: usize },
    Parallel { v: usize, a: usize, b: usize },
}

/// Applies the degree reductions to exhaustion. Returns the surviving
/// adjacency (which may contain edges created by smoothing) and the ops in
/// application order.
fn reduce(g: &Graph) -> (Vec<BTreeSet<usize>>, Vec<bool>, Vec<ReduceOp>) {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).into_iter().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut ops = Vec::new();
    loop {
        let mut progress = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            match adj[v].len() {
                0 => {
                    alive[v] = false;
                    ops.push(ReduceOp::Isolated(v));
                    progress = true;
                }
                1 => {
                    let a = *adj[v].iter().next().unwrap();
                    alive[v] = false;
                    adj[a].remove(&v);
                    adj[v].clear();
                    ops.push(ReduceOp::Leaf { v, anchor: a });
                    progress = true;
                }
                2 => {
                    let mut it = adj[v].iter();
                    let a = *it.next().unwrap();
                    let b = *it.next().unwrap();
                    alive[v] = false;
                    adj[a].remove(&v);
                    adj[b].remove(&v);
                    adj[v].clear();
                    if adj[a].contains(&b) {
                        ops.push(ReduceOp::Parallel { v, a, b });
                    } else {
                        adj[a].insert(b);
                        adj[b].insert(a);
                        ops.push(ReduceOp::Smooth { v, a, b });
                    }
                    progress = true;
                }
                _ => {}
            }
        }
        if !progress {
            return (adj, alive, ops);
        }
    }
}

/// Rebuilds a rotation for the original vertex set from a rotation of the
/// reduced graph by undoing the recorded ops, newest first.
fn replay(rot: &mut [Vec<usize>], ops: &[ReduceOp]) {
    for op in ops.iter().rev() {
        match *op {
            ReduceOp::Isolated(v) => {
                rot[v].clear();
            }
            ReduceOp::Leaf { v, anchor } => {
                rot[anchor].push(v);
                rot[v] = vec![anchor];
            }
            ReduceOp::Smooth { v, a, b } => {
                let pb = rot[a].iter().position(|&x| x == b).expect("smoothed edge");
                rot[a][pb] = v;
                let pa = rot[b].iter().position(|&x| x == a).expect("smoothed edge");
                rot[b][pa] = v;
                rot[v] = vec![a, b];
            }
            ReduceOp::Parallel { v, a, b } => {
                // alongside the surviving a-b edge: before b at a, after a at b
                let pb = rot[a].iter().position(|&x| x == b).expect("parallel edge");
                rot[a].insert(pb, v);
                let pa = rot[b].iter().position(|&x| x == a).expect("parallel edge");
                rot[b].insert(pa + 1, v);
                rot[v] = vec![a, b];
            }
        }
    }
}

/// Biconnected blocks of a connected graph as sorted vertex lists, in a
/// deterministic DFS discovery order. Isolated vertices yield no blocks.
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    // iterative DFS with explicit neighbor cursors
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = Vec::new(); // (v, parent, cursor)
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&(v, parent, cursor)) = stack.last() {
            let nbrs = g.neighbors(v);
            if cursor < nbrs.len() {
                stack.last_mut().unwrap().2 += 1;
                let u = nbrs[cursor];
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                let Some(&(p, _, _)) = stack.last() else {
                    continue;
                };
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    // pop the block of edges explored above (p, v)
                    let mut verts = BTreeSet::new();
                    while let Some(&(x, y)) = edge_stack.last() {
                        if disc[x] >= disc[v] {
                            verts.insert(x);
                            verts.insert(y);
                            edge_stack.pop();
                        } else {
                            break;
                        }
                    }
                    if let Some(&(x, y)) = edge_stack.last() {
                        if (x, y) == (p, v) {
                            verts.insert(x);
                            verts.insert(y);
                            edge_stack.pop();
                        }
                    }
                    if !verts.is_empty() {
                        blocks.push(verts.into_iter().collect());
                    }
                }
            }
        }
    }
    blocks
}

struct Ctx<'a> {
    nodes: &'a mut u64,
    node_limit: u64,
}

enum ConnOutcome {
    Exact {
        genus: usize,
        rotation: Vec<Vec<usize>>,
    },
    ExceedsMax,
    Exhausted {
        genus_at_least: usize,
    },
}

/// Exact genus of a connected graph with reductions, block decomposition,
/// and recursion.
fn solve_connected(sub: &Graph, max_genus: usize, ctx: &mut Ctx) -> ConnOutcome {
    let n = sub.n();
    let (adj, alive, ops) = reduce(sub);
    let survivors: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if survivors.is_empty() {
        let mut rot = vec![Vec::new(); n];
        replay(&mut rot, &ops);
        return ConnOutcome::Exact {
            genus: 0,
            rotation: rot,
        };
    }

    // the reduced graph, renumbered
    let index_of = |v: usize| survivors.binary_search(&v).unwrap();
    let labels = survivors.iter().map(|&v| v.to_string()).collect();
    let mut reduced = Graph::new(labels);
    for &v in &survivors {
        for &u in &adj[v] {
            if u > v {
                reduced.add_edge(index_of(v), index_of(u));
            }
        }
    }

    let blocks = biconnected_blocks(&reduced);
    let fully_reduced = ops.is_empty() && blocks.len() == 1 && blocks[0].len() == reduced.n();

    let mut rot_reduced: Vec<Vec<usize>> = vec![Vec::new(); reduced.n()];
    let mut genus_total = 0usize;

    if fully_reduced {
        match block_genus(&reduced, max_genus, ctx.node_limit, ctx.nodes) {
            BlockOutcome::Exact { genus, rotation } => {
                genus_total = genus;
                rot_reduced = rotation.cyclic;
            }
            BlockOutcome::ExceedsMax => return ConnOutcome::ExceedsMax,
            BlockOutcome::Exhausted { genus_at_least } => {
                return ConnOutcome::Exhausted { genus_at_least }
            }
        }
    } else {
        let lbs: Vec<usize> = blocks
            .iter()
            .map(|b| super::genus_lower_bound(&reduced.induced(b)))
            .collect();
        let lb_total: usize = lbs.iter().sum();
        if lb_total > max_genus {
            return ConnOutcome::ExceedsMax;
        }
        for (i, block) in blocks.iter().enumerate() {
            let bg = reduced.induced(block);
            let rest_lb: usize = lbs[i + 1..].iter().sum();
            let block_max = max_genus - genus_total - rest_lb;
            match solve_connected(&bg, block_max, ctx) {
                ConnOutcome::Exact { genus, rotation } => {
                    genus_total += genus;
                    for (bi, &rv) in block.iter().enumerate() {
                        let cycle: Vec<usize> = rotation[bi].iter().map(|&u| block[u]).collect();
                        rot_reduced[rv].extend(cycle);
                    }
                }
                ConnOutcome::ExceedsMax => return ConnOutcome::ExceedsMax,
                ConnOutcome::Exhausted { genus_at_least } => {
                    return ConnOutcome::Exhausted {
                        genus_at_least: genus_total + genus_at_least + rest_lb,
                    }
                }
            }
        }
    }

    // back to the original ids, then undo the reductions
    let mut rot = vec![Vec::new(); n];
    for (ri, cycle) in rot_reduced.into_iter().enumerate() {
        rot[survivors[ri]] = cycle.into_iter().map(|u| survivors[u]).collect();
    }
    replay(&mut rot, &ops);
    ConnOutcome::Exact {
        genus: genus_total,
        rotation: rot,
    }
}

pub(crate) fn min_genus_reduced(g: &Graph, budget: GenusBudget) -> MinGenusOutcome {
    let comps = g.components();
    let lbs: Vec<usize> = comps
        .iter()
        .map(|c| super::genus_lower_bound(&g.induced(c)))
        .collect();
    let lb_total: usize = lbs.iter().sum();
    if lb_total > budget.max_genus {
        return MinGenusOutcome::ExceedsMax {
            max_genus: budget.max_genus,
        };
    }
    let mut nodes = 0u64;
    let mut ctx = Ctx {
        nodes: &mut nodes,
        node_limit: budget.node_limit,
    };
    let mut genus_total = 0usize;
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut faces = 0usize;
    for (i, comp) in comps.iter().enumerate() {
        let sub = g.induced(comp);
        let rest_lb: usize = lbs[i + 1..].iter().sum();
        let comp_max = budget.max_genus - genus_total - rest_lb;
        match solve_connected(&sub, comp_max, &mut ctx) {
            ConnOutcome::Exact { genus, rotation: r } => {
                genus_total += genus;
                for (ci, cycle) in r.into_iter().enumerate() {
                    rotation[comp[ci]] = cycle.into_iter().map(|u| comp[u]).collect();
                }
                // face count per component from its own trace
                let comp_rot = RotationSystem {
                    cyclic: comp
                        .iter()
                        .map(|&v| {
                            rotation[v]
                                .iter()
                                .map(|&u| comp.binary_search(&u).unwrap())
                                .collect()
                        })
                        .collect(),
                };
                let f = if sub.edge_count() == 0 {
                    1
                } else {
                    count_faces(&sub, &comp_rot)
                };
                debug_assert_eq!(
                    f as i64,
                    sub.edge_count() as i64 - sub.n() as i64 + 2 - 2 * genus as i64,
                    "stitched rotation must realize the computed genus"
                );
                faces += f;
            }
            ConnOutcome::ExceedsMax => {
                return MinGenusOutcome::ExceedsMax {
                    max_genus: budget.max_genus,
                }
            }
            ConnOutcome::Exhausted { genus_at_least } => {
                return MinGenusOutcome::Exhausted {
                    nodes: *ctx.nodes,
                    genus_at_least: genus_total + genus_at_least + rest_lb,
                }
            }
        }
    }
    MinGenusOutcome::Exact(EmbeddingResult {
        genus: genus_total,
        rotation: RotationSystem { cyclic: rotation },
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut g = Graph::new(labels);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    #[test]
    fn cycles_and_trees_reduce_to_nothing() {
        for n in 3..8 {
            let g = cycle(n);
            let (_, alive, _) = reduce(&g);
            assert!(alive.iter().all(|&a| !a), "C_{n} should vanish");
        }
    }

    #[test]
    fn theta_graph_reduces_and_replays_to_genus_zero() {
        // two hubs joined by three length-2 paths: smoothing plus two
        // parallel-path deletions, rebuilt into a 3-face sphere embedding
        let mut g = Graph::new((0..5).map(|i| i.to_string()).collect());
        for mid in [2, 3, 4] {
            g.add_edge(0, mid);
            g.add_edge(mid, 1);
        }
        match min_genus_reduced(&g, GenusBudget::default()) {
            MinGenusOutcome::Exact(e) => {
                assert_eq!(e.genus, 0);
                assert_eq!(e.faces, 3); // V - E + F = 5 - 6 + 3 = 2
                let t = super::super::trace_faces(&g, &e.rotation).unwrap();
                assert_eq!(t.genus, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn blocks_of_a_bowtie() {
        // two triangles sharing vertex 0
        let mut g = Graph::new((0..5).map(|i| i.to_string()).collect());
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(0, 3);
        g.add_edge(0, 4);
        g.add_edge(3, 4);
        let blocks = biconnected_blocks(&g);
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            assert_eq!(b.len(), 3);
            assert!(b.contains(&0));
        }
    }

    #[test]
    fn bridge_is_its_own_block() {
        // triangle 0-1-2, bridge 2-3, triangle 3-4-5
        let mut g = Graph::new((0..6).map(|i| i.to_string()).collect());
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(3, 5);
        let blocks = biconnected_blocks(&g);
        assert_eq!(blocks.len(), 3);
        assert!(blocks.iter().any(|b| b == &vec![2, 3]));
    }
}
