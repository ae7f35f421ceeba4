//! The LC heuristic: color one maximal independent set per round.
//!
//! For every live color `i` the candidates `Q_i` are the uncolored vertices
//! whose list contains `i`, ordered by static degree (then id). A greedy
//! scan builds an independent set from each `Q_i`; the color with the
//! largest set (smallest id on ties) is applied to the whole set and leaves
//! the palette. The run fails once uncolored vertices remain and the palette
//! is exhausted.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};
use crate::instance::{Color, Coloring, Instance};
use crate::outcome::SolveOutcome;

/// Uncolored vertices that may still take `color`, in scan order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorCandidates {
    pub color: Color,
    pub vertices: Vec<Vertex>,
}

impl ColorCandidates {
    pub fn build(inst: &Instance, color: Color, colored: &[bool]) -> Self {
        let g = inst.graph();
        let mut vertices: Vec<Vertex> = (0..inst.n())
            .filter(|&v| !colored[v] && inst.list(v).binary_search(&color).is_ok())
            .collect();
        vertices.sort_by_key(|&v| (g.degree(v), v));
        ColorCandidates { color, vertices }
    }
}

/// Seeds the set with the first candidate, then adds each later candidate
/// that has no neighbour in the set.
pub fn greedy_mis(candidates: &[Vertex], g: &Graph) -> Vec<Vertex> {
    let mut set: Vec<Vertex> = Vec::new();
    for &v in candidates {
        if set.iter().all(|&s| !g.is_edge(s, v)) {
            set.push(v);
        }
    }
    set
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcRound {
    pub color: Color,
    pub candidates: Vec<Vertex>,
    pub colored: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcRun {
    pub outcome: SolveOutcome,
    pub rounds: Vec<LcRound>,
}

pub fn lc_solve(inst: &Instance) -> SolveOutcome {
    lc_run(inst).outcome
}

pub fn lc_run(inst: &Instance) -> LcRun {
    let g = inst.graph();
    let n = inst.n();
    let mut live: BTreeSet<Color> = inst.palette().iter().copied().collect();
    let mut colored = vec![false; n];
    let mut left = n;
    let mut coloring = Coloring::uncolored(n);
    let mut rounds = Vec::new();

    while left > 0 {
        let mut best: Option<(ColorCandidates, Vec<Vertex>)> = None;
        for &color in &live {
            let q = ColorCandidates::build(inst, color, &colored);
            if q.vertices.is_empty() {
                continue;
            }
            let s = greedy_mis(&q.vertices, g);
            if best.as_ref().is_none_or(|(_, b)| s.len() > b.len()) {
                best = Some((q, s));
            }
        }
        // No live color reaches an uncolored vertex: every remaining round
        // would apply an empty set until the palette runs dry.
        let Some((q, set)) = best else {
            return LcRun {
                outcome: SolveOutcome::HeuristicFailure,
                rounds,
            };
        };
        for &v in &set {
            colored[v] = true;
            coloring.set(v, Some(q.color));
        }
        left -= set.len();
        live.remove(&q.color);
        rounds.push(LcRound {
            color: q.color,
            candidates: q.vertices,
            colored: set,
        });
    }

    LcRun {
        outcome: SolveOutcome::Feasible {
            coloring,
            proven_optimal: false,
        },
        rounds,
    }
}
