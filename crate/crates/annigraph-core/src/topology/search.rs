//! Face-driven rotation-system search.
//!
//! Darts are directed edges; a rotation system is equivalent to the face
//! successor map `succ`, where `succ((u,v)) = (v,w)` exactly when `w` follows
//! `u` in the cyclic order at `v`. The search assigns `succ` one dart at a
//! time, always extending the currently open face, under two chain
//! disciplines:
//!
//! * face chains: linking a dart to the head of its own chain closes a face,
//!   which must have length at least the girth (at least 2 with pendant
//!   vertices) and must not overshoot the face target `F = E - V + 2 - 2g`;
//! * local chains: the induced "next neighbor" links at each vertex must
//!   form a single cycle, so a local cycle may only close when it covers the
//!   whole neighborhood.
//!
//! Pruning compares the face target against the optimistic face count still
//! reachable: closed faces, plus one for the face under construction, plus
//! the dart budget left for the rest.

use super::RotationSystem;
use crate::graph::{compute_girth, Graph};

pub(crate) enum BlockOutcome {
    Exact {
        genus: usize,
        rotation: RotationSystem,
    },
    ExceedsMax,
    Exhausted {
        genus_at_least: usize,
    },
}

/// Exact genus of a connected graph by iterative deepening from the Euler
/// lower bound. `nodes` accumulates link decisions across calls.
pub(crate) fn block_genus(
    g: &Graph,
    max_genus: usize,
    node_limit: u64,
    nodes: &mut u64,
) -> BlockOutcome {
    let n = g.n();
    let e = g.edge_count();
    if e == 0 {
        return BlockOutcome::Exact {
            genus: 0,
            rotation: RotationSystem {
                cyclic: vec![Vec::new(); n],
            },
        };
    }
    let lb = super::genus_lower_bound(g);
    if lb > max_genus {
        return BlockOutcome::ExceedsMax;
    }
    // any rotation system has at least one face, so genus never exceeds this
    let embed_max = (e + 1 - n) / 2;
    for target in lb..=max_genus.min(embed_max) {
        let f_target = e + 2 - n - 2 * target;
        let mut s = Searcher::new(g, f_target, node_limit, nodes);
        match s.run() {
            RunResult::Found(rotation) => {
                return BlockOutcome::Exact {
                    genus: target,
                    rotation,
                }
            }
            RunResult::Refuted => {}
            RunResult::OutOfBudget => {
                return BlockOutcome::Exhausted {
                    genus_at_least: target,
                }
            }
        }
    }
    if max_genus < embed_max {
        BlockOutcome::ExceedsMax
    } else {
        unreachable!("every graph embeds with at most (E - V + 1)/2 handles")
    }
}

enum RunResult {
    Found(RotationSystem),
    Refuted,
    OutOfBudget,
}

const NONE: u32 = u32::MAX;

/// Merge/close bookkeeping shared by face chains and local rotation chains.
struct Chains {
    has_succ: Vec<bool>,
    has_pred: Vec<bool>,
    head_of: Vec<u32>, // valid while the index is a chain tail
    tail_of: Vec<u32>, // valid while the index is a chain head
    len: Vec<u32>,     // valid at chain heads
}

#[derive(Clone, Copy)]
enum ChainFrame {
    Close { t: u32, h: u32 },
    Merge { t: u32, h: u32, hh: u32, tt: u32 },
}

impl Chains {
    fn new(n: usize) -> Chains {
        Chains {
            has_succ: vec![false; n],
            has_pred: vec![false; n],
            head_of: (0..n as u32).collect(),
            tail_of: (0..n as u32).collect(),
            len: vec![1; n],
        }
    }

    /// Length of the cycle that linking `t -> h` would close, if it would.
    fn closing_len(&self, t: u32, h: u32) -> Option<u32> {
        (self.head_of[t as usize] == h).then(|| self.len[h as usize])
    }

    fn link(&mut self, t: u32, h: u32) -> ChainFrame {
        debug_assert!(!self.has_succ[t as usize] && !self.has_pred[h as usize]);
        self.has_succ[t as usize] = true;
        self.has_pred[h as usize] = true;
        let hh = self.head_of[t as usize];
        if hh == h {
            ChainFrame::Close { t, h }
        } else {
            let tt = self.tail_of[h as usize];
            self.head_of[tt as usize] = hh;
            self.tail_of[hh as usize] = tt;
            self.len[hh as usize] += self.len[h as usize];
            ChainFrame::Merge { t, h, hh, tt }
        }
    }

    fn unlink(&mut self, frame: ChainFrame) {
        match frame {
            ChainFrame::Close { t, h } => {
                self.has_succ[t as usize] = false;
                self.has_pred[h as usize] = false;
            }
            ChainFrame::Merge { t, h, hh, tt } => {
                self.has_succ[t as usize] = false;
                self.has_pred[h as usize] = false;
                self.len[hh as usize] -= self.len[h as usize];
                self.head_of[tt as usize] = h;
                self.tail_of[hh as usize] = t;
            }
        }
    }
}

struct Searcher<'a> {
    deg: Vec<u32>,
    rev: Vec<u32>,
    dart_head: Vec<u32>,
    out_darts: Vec<Vec<u32>>, // out-darts at each vertex, ascending by head
    succ: Vec<u32>,
    faces: Chains,
    local: Chains,
    closed: usize,
    closed_len: usize,
    d_total: usize,
    min_face: usize,
    f_target: usize,
    nodes: &'a mut u64,
    node_limit: u64,
    out_of_budget: bool,
}

impl<'a> Searcher<'a> {
    fn new(g: &Graph, f_target: usize, node_limit: u64, nodes: &'a mut u64) -> Self {
        let n = g.n();
        let mut rev = Vec::new();
        let mut dart_head = Vec::new();
        let mut out_darts = vec![Vec::new(); n];
        for (u, v) in g.edges() {
            let d1 = dart_head.len() as u32; // u -> v
            let d2 = d1 + 1; // v -> u
            dart_head.push(v as u32);
            dart_head.push(u as u32);
            rev.push(d2);
            rev.push(d1);
            out_darts[u].push(d1);
            out_darts[v].push(d2);
        }
        for list in &mut out_darts {
            list.sort_by_key(|&d| dart_head[d as usize]);
        }
        let d_total = dart_head.len();
        let deg: Vec<u32> = (0..n).map(|v| out_darts[v].len() as u32).collect();
        let min_degree = deg.iter().copied().min().unwrap_or(0);
        let min_face = if min_degree >= 2 {
            compute_girth(g).expect("minimum degree 2 forces a cycle")
        } else {
            2
        };
        Searcher {
            deg,
            rev,
            dart_head,
            out_darts,
            succ: vec![NONE; d_total],
            faces: Chains::new(d_total),
            local: Chains::new(d_total),
            closed: 0,
            closed_len: 0,
            d_total,
            min_face,
            f_target,
            nodes,
            node_limit,
            out_of_budget: false,
        }
    }

    /// Optimistic face count: closed faces, the face under construction (of
    /// length `active_len` so far), and the best packing of what remains.
    fn bound_ok(&self, active_len: usize) -> bool {
        let remaining = self.d_total - self.closed_len;
        let possible = if active_len > 0 {
            let rest = remaining.saturating_sub(active_len.max(self.min_face));
            self.closed + 1 + rest / self.min_face
        } else {
            self.closed + remaining / self.min_face
        };
        possible >= self.f_target
    }

    fn run(&mut self) -> RunResult {
        if self.extend(None) {
            RunResult::Found(self.rotation())
        } else if self.out_of_budget {
            RunResult::OutOfBudget
        } else {
            RunResult::Refuted
        }
    }

    /// Reads the finished rotation out of the links: the neighbor after `u`
    /// at `v` is the head of `succ((u, v))`.
    fn rotation(&self) -> RotationSystem {
        let n = self.out_darts.len();
        let mut cyclic = vec![Vec::new(); n];
        for v in 0..n {
            if self.out_darts[v].is_empty() {
                continue;
            }
            let start = self.out_darts[v][0];
            let mut cur = start;
            loop {
                cyclic[v].push(self.dart_head[cur as usize] as usize);
                cur = self.succ[self.rev[cur as usize] as usize];
                if cur == start {
                    break;
                }
            }
        }
        RotationSystem { cyclic }
    }

    fn extend(&mut self, active: Option<u32>) -> bool {
        if self.out_of_budget {
            return false;
        }
        let d = match active {
            Some(d) => d,
            None => {
                // start the next face at the smallest unassigned dart
                match (0..self.d_total as u32).find(|&x| !self.faces.has_succ[x as usize]) {
                    Some(x) => x,
                    None => return self.closed == self.f_target,
                }
            }
        };
        let v = self.dart_head[d as usize] as usize;
        let lt = self.rev[d as usize]; // local chain node: the out-dart (v -> u)
        for i in 0..self.out_darts[v].len() {
            if self.out_of_budget {
                return false;
            }
            let b = self.out_darts[v][i];
            if self.faces.has_pred[b as usize] {
                continue;
            }
            debug_assert!(!self.local.has_pred[b as usize]);
            // local single-cycle discipline: only a full cycle may close
            if let Some(clen) = self.local.closing_len(lt, b) {
                if clen != self.deg[v] {
                    continue;
                }
            }
            // face discipline: no short faces, no overshooting the target
            let closing = self.faces.closing_len(d, b);
            if let Some(flen) = closing {
                if (flen as usize) < self.min_face || self.closed + 1 > self.f_target {
                    continue;
                }
            }
            *self.nodes += 1;
            if *self.nodes > self.node_limit {
                self.out_of_budget = true;
                return false;
            }

            let fframe = self.faces.link(d, b);
            let lframe = self.local.link(lt, b);
            self.succ[d as usize] = b;
            let (next_active, active_len) = match fframe {
                ChainFrame::Close { .. } => {
                    let flen = closing.unwrap() as usize;
                    self.closed += 1;
                    self.closed_len += flen;
                    (None, 0)
                }
                ChainFrame::Merge { hh, tt, .. } => {
                    (Some(tt), self.faces.len[hh as usize] as usize)
                }
            };
            if self.bound_ok(active_len) && self.extend(next_active) {
                return true;
            }
            if let ChainFrame::Close { .. } = fframe {
                let flen = closing.unwrap() as usize;
                self.closed -= 1;
                self.closed_len -= flen;
            }
            self.succ[d as usize] = NONE;
            self.local.unlink(lframe);
            self.faces.unlink(fframe);
        }
        false
    }
}
