//! Finite commutative rings with identity, their annihilator graphs, and
//! exact orientable genus computation.
//!
//! The annihilator graph of a ring `R` is the undirected graph `AG(R)` on the
//! nonzero zero-divisors of `R`, where distinct `x` and `y` are adjacent
//! exactly when `ann(xy) != ann(x) ∪ ann(y)`. For finite rings the planar and
//! toroidal cases admit a complete classification, and this crate exists to
//! check such classifications by direct computation:
//!
//! * [`ring`] constructs rings as verified multiplication tables: `Z_n`,
//!   finite fields, quotient presentations like `Z4[x]/(x^2 - 2, 2*x)`, and
//!   finite products, together with annihilators, units, nilpotents, and the
//!   decomposition into local factors.
//! * [`parse`] is a small expression language (`"Z4 x GF(4)"`,
//!   `"Z2[x,y]/(x^2, x*y, y^2)"`) that elaborates into ring objects.
//! * [`graph`] builds `AG(R)` and the classical zero-divisor graph, evaluates
//!   the three equivalent edge criteria independently, and recognizes the
//!   structured shapes (complete, complete bipartite, joins).
//! * [`topology`] decides planarity with certificates and computes exact
//!   orientable genus by rotation-system search with face-tracing pruning.
//! * [`classify`], [`catalog`], [`corpus`], [`family`], and [`export`] drive
//!   the verification workflow: theorem predicates evaluated as decision
//!   procedures, the built-in corpus of classified rings, family enumeration
//!   for consistency sweeps, and deterministic DOT/JSON/report output.
//!
//! Everything is exact: no floats, no heuristics presented as answers. Genus
//! search either returns an embedding witness, an exhaustion proof, or an
//! explicit "budget exceeded" outcome that callers must report as
//! inconclusive.

// Loops over element or dart indices that drive several parallel arrays
// read better as plain index loops.
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod classify;
pub mod corpus;
pub mod export;
pub mod family;
pub mod graph;
pub mod parse;
pub mod ring;
pub mod topology;

pub use graph::Graph;
pub use parse::RingExpr;
pub use ring::{RingObject, RingTable};
pub use topology::{Certificate, EmbeddingResult, GenusBudget, RotationSystem};
