//! Search for subdivisions of complete and complete bipartite graphs:
//! branch vertices joined by internally disjoint paths. Witnesses are
//! independently re-checkable; a `NotFound` answer means the search space
//! was exhausted.

use super::CompleteTarget;
use crate::graph::Graph;
use serde::Serialize;

/// One subdivision path between two branch vertices, stored as the full
/// vertex sequence including both endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivPath {
    /// Indices into `branch_vertices`.
    pub ends: (usize, usize),
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub target: CompleteTarget,
    /// For `K_n` the `n` branch vertices; for `K_{m,n}` the `m` side-one
    /// vertices followed by the `n` side-two vertices.
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<SubdivPath>,
}

#[derive(Debug, Clone)]
pub enum SubdivisionOutcome {
    Found(SubdivisionWitness),
    /// Exhaustive: no subdivision of the target exists.
    NotFound,
    /// Node budget ran out before the search space was covered.
    Exhausted,
}

fn target_pairs(target: CompleteTarget) -> (usize, Vec<(usize, usize)>, Vec<usize>) {
    match target {
        CompleteTarget::Kn(n) => {
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pairs.push((i, j));
                }
            }
            (n, pairs, vec![n - 1; n])
        }
        CompleteTarget::Kmn(m, n) => {
            let mut pairs = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    pairs.push((i, m + j));
                }
            }
            let mut degs = vec![n; m];
            degs.extend(vec![m; n]);
            (m + n, pairs, degs)
        }
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    branch: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    used: Vec<bool>, // internal vertices claimed by committed paths
    is_branch: Vec<bool>,
    paths: Vec<SubdivPath>,
    nodes: u64,
    node_limit: u64,
    exhausted: bool,
}

impl<'a> PathSearch<'a> {
    fn run(&mut self) -> bool {
        self.connect(0)
    }

    fn connect(&mut self, idx: usize) -> bool {
        if self.exhausted {
            return false;
        }
        if idx == self.pairs.len() {
            return true;
        }
        let (ri, rj) = self.pairs[idx];
        let (a, b) = (self.branch[ri], self.branch[rj]);
        // distance field toward b guides the path enumeration
        let dist = self.bfs_from(b);
        let mut path = vec![a];
        let mut on_path = vec![false; self.g.n()];
        on_path[a] = true;
        self.extend(idx, a, b, &dist, &mut path, &mut on_path)
    }

    fn extend(
        &mut self,
        idx: usize,
        v: usize,
        goal: usize,
        dist: &[usize],
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
    ) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.exhausted = true;
            return false;
        }
        let mut nbrs = self.g.neighbors(v);
        nbrs.sort_by_key(|&u| dist[u]);
        for u in nbrs {
            if self.exhausted {
                return false;
            }
            if u == goal {
                let (ri, rj) = self.pairs[idx];
                let mut vertices = path.clone();
                vertices.push(goal);
                // claim the interior
                for &w in &vertices[1..vertices.len() - 1] {
                    self.used[w] = true;
                }
                self.paths.push(SubdivPath {
                    ends: (ri, rj),
                    vertices,
                });
                if self.connect(idx + 1) {
                    return true;
                }
                let popped = self.paths.pop().unwrap();
                for &w in &popped.vertices[1..popped.vertices.len() - 1] {
                    self.used[w] = false;
                }
                continue;
            }
            if self.used[u] || self.is_branch[u] || on_path[u] || dist[u] == usize::MAX {
                continue;
            }
            path.push(u);
            on_path[u] = true;
            if self.extend(idx, u, goal, dist, path, on_path) {
                return true;
            }
            path.pop();
            on_path[u] = false;
        }
        false
    }

    fn bfs_from(&self, s: usize) -> Vec<usize> {
        let n = self.g.n();
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in self.g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

/// Searches for a subdivision of the target with the branch vertices fixed.
pub fn find_subdivision_rooted(
    g: &Graph,
    target: CompleteTarget,
    roots: &[usize],
    node_limit: u64,
) -> SubdivisionOutcome {
    let (roles, pairs, _) = target_pairs(target);
    assert_eq!(roots.len(), roles, "one root per branch role");
    let mut is_branch = vec![false; g.n()];
    for &r in roots {
        is_branch[r] = true;
    }
    let mut search = PathSearch {
        g,
        branch: roots.to_vec(),
        pairs,
        used: vec![false; g.n()],
        is_branch,
        paths: Vec::new(),
        nodes: 0,
        node_limit,
        exhausted: false,
    };
    if search.run() {
        SubdivisionOutcome::Found(SubdivisionWitness {
            target,
            branch_vertices: roots.to_vec(),
            paths: search.paths,
        })
    } else if search.exhausted {
        SubdivisionOutcome::Exhausted
    } else {
        SubdivisionOutcome::NotFound
    }
}

/// Searches for a subdivision of `K_n` or `K_{m,n}`, enumerating branch
/// vertex assignments by ascending vertex id (within each side).
pub fn find_subdivision(g: &Graph, target: CompleteTarget, node_limit: u64) -> SubdivisionOutcome {
    let (roles, pairs, degs) = target_pairs(target);
    let need_edges = pairs.len();
    if need_edges > g.edge_count() || roles > g.n() {
        return SubdivisionOutcome::NotFound;
    }
    let mut budget = node_limit;
    let mut assignment = Vec::with_capacity(roles);
    let mut exhausted = false;
    let found = assign_branches(
        g,
        target,
        &pairs,
        &degs,
        &mut assignment,
        &mut budget,
        &mut exhausted,
    );
    match found {
        Some(w) => SubdivisionOutcome::Found(w),
        None if exhausted => SubdivisionOutcome::Exhausted,
        None => SubdivisionOutcome::NotFound,
    }
}

fn assign_branches(
    g: &Graph,
    target: CompleteTarget,
    pairs: &[(usize, usize)],
    degs: &[usize],
    assignment: &mut Vec<usize>,
    budget: &mut u64,
    exhausted: &mut bool,
) -> Option<SubdivisionWitness> {
    let roles = degs.len();
    if assignment.len() == roles {
        let mut is_branch = vec![false; g.n()];
        for &r in assignment.iter() {
            is_branch[r] = true;
        }
        let mut search = PathSearch {
            g,
            branch: assignment.clone(),
            pairs: pairs.to_vec(),
            used: vec![false; g.n()],
            is_branch,
            paths: Vec::new(),
            nodes: 0,
            node_limit: *budget,
            exhausted: false,
        };
        let ok = search.run();
        *budget = budget.saturating_sub(search.nodes);
        if search.exhausted {
            *exhausted = true;
        }
        if ok {
            return Some(SubdivisionWitness {
                target,
                branch_vertices: assignment.clone(),
                paths: search.paths,
            });
        }
        return None;
    }
    if *exhausted {
        return None;
    }
    let role = assignment.len();
    // ascending ids within a side; sides of K_{m,n} start afresh
    let side_start = match target {
        CompleteTarget::Kn(_) => 0,
        CompleteTarget::Kmn(m, _) => {
            if role < m {
                0
            } else {
                m
            }
        }
    };
    let min_v = if role == side_start {
        // symmetric sides of K_{m,m}: fix the side containing the smallest
        match target {
            CompleteTarget::Kmn(m, n) if m == n && role == m => assignment[0] + 1,
            _ => 0,
        }
    } else {
        assignment[role - 1] + 1
    };
    for v in min_v..g.n() {
        if g.degree(v) < degs[role] || assignment.contains(&v) {
            continue;
        }
        *budget = budget.saturating_sub(1);
        if *budget == 0 {
            *exhausted = true;
            return None;
        }
        assignment.push(v);
        if let Some(w) = assign_branches(g, target, pairs, degs, assignment, budget, exhausted) {
            return Some(w);
        }
        assignment.pop();
        if *exhausted {
            return None;
        }
    }
    None
}

/// Re-checks a witness against the graph: path endpoints, adjacency along
/// paths, internal disjointness, and coverage of every target edge.
pub fn validate_subdivision(g: &Graph, w: &SubdivisionWitness) -> bool {
    let (roles, mut pairs, _) = target_pairs(w.target);
    if w.branch_vertices.len() != roles {
        return false;
    }
    let mut seen_branch = std::collections::HashSet::new();
    for &b in &w.branch_vertices {
        if b >= g.n() || !seen_branch.insert(b) {
            return false;
        }
    }
    let mut internal_seen = std::collections::HashSet::new();
    let mut covered = Vec::new();
    for p in &w.paths {
        let (i, j) = p.ends;
        if i >= roles || j >= roles {
            return false;
        }
        if p.vertices.len() < 2 {
            return false;
        }
        if p.vertices[0] != w.branch_vertices[i]
            || *p.vertices.last().unwrap() != w.branch_vertices[j]
        {
            return false;
        }
        for pair in p.vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return false;
            }
        }
        for &v in &p.vertices[1..p.vertices.len() - 1] {
            if seen_branch.contains(&v) || !internal_seen.insert(v) {
                return false;
            }
        }
        covered.push(if i < j { (i, j) } else { (j, i) });
    }
    covered.sort_unstable();
    pairs.sort_unstable();
    covered == pairs
}
