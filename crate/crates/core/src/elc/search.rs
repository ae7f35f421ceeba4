//! Depth-first branch and bound over list colorings.

use std::time::Instant;

use serde::Serialize;

use super::select::{SelectorKind, VertexSelector};
use super::state::SearchState;
use crate::instance::{validate_coloring, Coloring, Instance};

/// Per-search limits.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Maximum color assignments (node expansions) for this search.
    pub iteration_cap: Option<u64>,
    pub deadline: Option<Instant>,
    /// Upper-bound pruning and the stop at `UB == LB`. Disabling both turns
    /// the search into a plain enumeration.
    pub prune: bool,
    pub selector: SelectorKind,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            iteration_cap: None,
            deadline: None,
            prune: true,
            selector: SelectorKind::default(),
        }
    }
}

/// Best coloring found so far, shared by consecutive searches.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Incumbent {
    pub best: Option<Coloring>,
    /// Distinct-color count of every new best, in the order found.
    pub history: Vec<usize>,
}

impl Incumbent {
    /// Distinct colors of the best coloring; `usize::MAX` before the first.
    pub fn upper_bound(&self) -> usize {
        self.history.last().copied().unwrap_or(usize::MAX)
    }

    fn record(&mut self, coloring: Coloring, distinct: usize) {
        debug_assert!(distinct < self.upper_bound());
        self.best = Some(coloring);
        self.history.push(distinct);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchEnd {
    /// The whole subtree was explored.
    Completed,
    /// A coloring meeting the lower bound was found.
    Certified,
    Capped,
    TimedOut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub end: SearchEnd,
    pub nodes: u64,
}

/// Branch and bound below the partial coloring `initial`.
///
/// At each node the selector picks a vertex and every free list color is
/// tried in ascending order. A branch is cut when its distinct-color count
/// reaches the incumbent; a complete coloring that beats the incumbent
/// replaces it, and one that meets `lower_bound` ends the search.
pub fn bb_search(
    inst: &Instance,
    initial: &Coloring,
    lower_bound: usize,
    limits: &SearchLimits,
    incumbent: &mut Incumbent,
) -> SearchReport {
    debug_assert!(validate_coloring(inst, initial, false).is_valid());
    let mut state = SearchState::new(inst);
    for v in 0..inst.n() {
        if let Some(c) = initial.get(v) {
            let s = state.slot_of(c).expect("initial coloring uses list colors");
            state.assign(v, s);
        }
    }
    let mut selector = limits.selector.build();
    selector.init(&state);
    let mut search = Search {
        state,
        selector,
        limits,
        lower_bound,
        incumbent,
        nodes: 0,
    };
    let end = match search.descend() {
        Flow::Continue => SearchEnd::Completed,
        Flow::Stop(end) => end,
    };
    SearchReport {
        end,
        nodes: search.nodes,
    }
}

enum Flow {
    Continue,
    Stop(SearchEnd),
}

struct Search<'a, 'i> {
    state: SearchState<'a>,
    selector: Box<dyn VertexSelector>,
    limits: &'a SearchLimits,
    lower_bound: usize,
    incumbent: &'i mut Incumbent,
    nodes: u64,
}

impl Search<'_, '_> {
    fn descend(&mut self) -> Flow {
        let Some(v) = self.selector.select(&self.state) else {
            return self.leaf();
        };
        let prune = self.limits.prune;
        let slots: Vec<u32> = self.state.lists[v]
            .iter()
            .copied()
            .filter(|&s| self.state.is_free(v, s))
            .collect();
        for s in slots {
            let next = self.state.distinct() + usize::from(self.state.is_fresh(s));
            if prune && next >= self.incumbent.upper_bound() {
                continue;
            }
            if let Some(cap) = self.limits.iteration_cap {
                if self.nodes >= cap {
                    return Flow::Stop(SearchEnd::Capped);
                }
            }
            if self.nodes.is_multiple_of(256) {
                if let Some(deadline) = self.limits.deadline {
                    if Instant::now() >= deadline {
                        return Flow::Stop(SearchEnd::TimedOut);
                    }
                }
            }
            self.nodes += 1;
            self.apply(v, Some(s));
            let flow = self.descend();
            self.apply(v, None);
            if let Flow::Stop(_) = flow {
                return flow;
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self) -> Flow {
        let distinct = self.state.distinct();
        if distinct < self.incumbent.upper_bound() {
            self.incumbent.record(self.state.to_coloring(), distinct);
        }
        if self.limits.prune && self.incumbent.upper_bound() <= self.lower_bound {
            return Flow::Stop(SearchEnd::Certified);
        }
        Flow::Continue
    }

    fn apply(&mut self, v: usize, slot: Option<u32>) {
        match slot {
            Some(s) => self.state.assign(v, s),
            None => self.state.unassign(v),
        }
        self.selector.refresh(v, &self.state);
        let graph = self.state.graph;
        for &u in graph.neighbors(v) {
            self.selector.refresh(u, &self.state);
        }
    }
}
