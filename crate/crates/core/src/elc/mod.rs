//! Exact branch-and-bound list coloring.
//!
//! ELC grows one greedy clique, takes its size as the lower bound and runs a
//! capped branch and bound from every feasible coloring of the clique in
//! turn, keeping one incumbent across all restarts. dcc does the same with
//! two disjoint cliques, using the exact optimum of the subgraph they induce
//! as the lower bound and every coloring of that subgraph as a restart seed.

mod clique;
mod search;
mod select;
mod state;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use clique::{
    enumerate_clique_colorings, find_clique, find_clique_within, CliqueColoring, ColoringEnumerator,
};
pub use search::{bb_search, Incumbent, SearchEnd, SearchLimits, SearchReport};
pub use select::{
    select_next_vertex, unavailable_degree, LinearScan, PriorityQueue, SelectorKind, VertexSelector,
};
pub use state::SearchState;

use crate::graph::Vertex;
use crate::instance::{Coloring, Instance};
use crate::outcome::SolveOutcome;

/// Node expansions allowed per restart unless configured otherwise.
pub const DEFAULT_ITERATION_CAP: u64 = 5_000;
pub const DEFAULT_WALL_CLOCK_SECONDS: f64 = 1_800.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Restarts {
    All,
    FirstN(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BbLimits {
    /// Node expansions per restart; `None` lets every restart run to the end.
    pub iteration_cap: Option<u64>,
    /// Budget for the whole solve; `None` means unlimited.
    pub wall_clock_seconds: Option<f64>,
    pub restarts: Restarts,
    pub selector: SelectorKind,
    pub prune: bool,
}

impl Default for BbLimits {
    fn default() -> Self {
        BbLimits {
            iteration_cap: Some(DEFAULT_ITERATION_CAP),
            wall_clock_seconds: Some(DEFAULT_WALL_CLOCK_SECONDS),
            restarts: Restarts::All,
            selector: SelectorKind::default(),
            prune: true,
        }
    }
}

impl BbLimits {
    /// No per-restart cap, the given wall-clock budget.
    pub fn uncapped(seconds: Option<f64>) -> Self {
        BbLimits {
            iteration_cap: None,
            wall_clock_seconds: seconds,
            ..BbLimits::default()
        }
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.wall_clock_seconds
            .map(|s| start + Duration::from_secs_f64(s.max(0.0)))
    }
}

/// Outcome of an ELC or dcc solve plus search statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BbResult {
    pub outcome: SolveOutcome,
    pub lower_bound: usize,
    pub cliques: Vec<Vec<Vertex>>,
    /// Node expansions over every search, including the dcc bound search.
    pub nodes: u64,
    pub restarts: usize,
    pub capped_restarts: usize,
    pub ub_history: Vec<usize>,
}

/// Restart seeds: colorings of a vertex subset, produced lazily.
struct Seeds {
    vertices: Vec<Vertex>,
    enumerator: ColoringEnumerator,
}

impl Seeds {
    fn new(inst: &Instance, vertices: Vec<Vertex>) -> Self {
        let sub = inst.induced(&vertices);
        Seeds {
            vertices,
            enumerator: ColoringEnumerator::new(sub),
        }
    }

    fn next_below(&mut self, n: usize, bound: usize) -> Option<Coloring> {
        let sub = self.enumerator.next_below(bound)?;
        let mut col = Coloring::uncolored(n);
        for (i, &v) in self.vertices.iter().enumerate() {
            col.set(v, sub.get(i));
        }
        Some(col)
    }
}

fn search_limits(limits: &BbLimits, deadline: Option<Instant>) -> SearchLimits {
    SearchLimits {
        iteration_cap: limits.iteration_cap,
        deadline,
        prune: limits.prune,
        selector: limits.selector,
    }
}

fn run_restarts(
    inst: &Instance,
    lower_bound: usize,
    cliques: Vec<Vec<Vertex>>,
    mut seeds: Seeds,
    limits: &BbLimits,
    deadline: Option<Instant>,
    prior_nodes: u64,
) -> BbResult {
    let search = search_limits(limits, deadline);
    let mut incumbent = Incumbent::default();
    let mut nodes = prior_nodes;
    let mut restarts = 0;
    let mut capped = 0;
    let mut certified = false;
    let mut timed_out = false;
    let mut exhausted = true;

    loop {
        if limits.prune && incumbent.upper_bound() <= lower_bound {
            certified = true;
            break;
        }
        if let Restarts::FirstN(max) = limits.restarts {
            if restarts >= max {
                let bound = if limits.prune {
                    incumbent.upper_bound()
                } else {
                    usize::MAX
                };
                exhausted = seeds.next_below(inst.n(), bound).is_none();
                break;
            }
        }
        if deadline.is_some_and(|d| Instant::now() >= d) {
            timed_out = true;
            break;
        }
        let bound = if limits.prune {
            incumbent.upper_bound()
        } else {
            usize::MAX
        };
        let Some(initial) = seeds.next_below(inst.n(), bound) else {
            break;
        };
        restarts += 1;
        let report = bb_search(inst, &initial, lower_bound, &search, &mut incumbent);
        nodes += report.nodes;
        match report.end {
            SearchEnd::Completed => {}
            SearchEnd::Certified => {
                certified = true;
                break;
            }
            SearchEnd::Capped => capped += 1,
            SearchEnd::TimedOut => {
                timed_out = true;
                break;
            }
        }
    }

    let outcome = if certified {
        SolveOutcome::Feasible {
            coloring: incumbent
                .best
                .clone()
                .expect("certified search has a coloring"),
            proven_optimal: true,
        }
    } else if timed_out {
        SolveOutcome::TimedOut {
            best: incumbent.best.clone(),
        }
    } else {
        let proven = exhausted && capped == 0;
        match (incumbent.best.clone(), proven) {
            (Some(coloring), proven) => SolveOutcome::Feasible {
                coloring,
                proven_optimal: proven,
            },
            (None, true) => SolveOutcome::Infeasible,
            (None, false) => SolveOutcome::NoSolution,
        }
    };
    BbResult {
        outcome,
        lower_bound,
        cliques,
        nodes,
        restarts,
        capped_restarts: capped,
        ub_history: incumbent.history,
    }
}

fn trivial(inst: &Instance) -> Option<BbResult> {
    (inst.n() == 0).then(|| BbResult {
        outcome: SolveOutcome::Feasible {
            coloring: Coloring::uncolored(0),
            proven_optimal: true,
        },
        lower_bound: 0,
        cliques: Vec::new(),
        nodes: 0,
        restarts: 0,
        capped_restarts: 0,
        ub_history: vec![0],
    })
}

/// Single-clique ELC.
pub fn elc_solve(inst: &Instance, limits: &BbLimits) -> BbResult {
    if let Some(done) = trivial(inst) {
        return done;
    }
    let deadline = limits.deadline(Instant::now());
    let clique = find_clique(inst.graph());
    let seeds = Seeds::new(inst, clique.clone());
    run_restarts(inst, clique.len(), vec![clique], seeds, limits, deadline, 0)
}

/// Double-clique variant.
pub fn dcc_solve(inst: &Instance, limits: &BbLimits) -> BbResult {
    if let Some(done) = trivial(inst) {
        return done;
    }
    let deadline = limits.deadline(Instant::now());
    let g = inst.graph();
    let first = find_clique(g);
    let mut allowed = vec![true; g.n()];
    for &v in &first {
        allowed[v] = false;
    }
    let second = find_clique_within(g, &allowed);
    let mut joint: Vec<Vertex> = first.iter().chain(&second).copied().collect();
    joint.sort_unstable();

    // Exact optimum of the two-clique subgraph.
    let sub = inst.induced(&joint);
    let clique_bound = first.len().max(second.len());
    let mut sub_best = Incumbent::default();
    let sub_limits = SearchLimits {
        iteration_cap: None,
        deadline,
        prune: true,
        selector: limits.selector,
    };
    let report = bb_search(
        &sub,
        &Coloring::uncolored(sub.n()),
        clique_bound,
        &sub_limits,
        &mut sub_best,
    );
    let lower_bound = match (report.end, sub_best.best.is_some()) {
        (SearchEnd::TimedOut, _) => clique_bound,
        (_, true) => sub_best.upper_bound(),
        (_, false) => {
            return BbResult {
                outcome: SolveOutcome::Infeasible,
                lower_bound: clique_bound,
                cliques: vec![first, second],
                nodes: report.nodes,
                restarts: 0,
                capped_restarts: 0,
                ub_history: Vec::new(),
            }
        }
    };
    let seeds = Seeds::new(inst, joint);
    run_restarts(
        inst,
        lower_bound,
        vec![first, second],
        seeds,
        limits,
        deadline,
        report.nodes,
    )
}
