//! Next-vertex selection.
//!
//! The rule: largest unavailable degree, then most uncolored neighbours,
//! then smallest id. Unavailable degree counts the palette colors (union of
//! all lists) a vertex cannot take, either because they are off its list or
//! because a colored neighbour already holds them.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::state::SearchState;
use crate::graph::Vertex;
use crate::instance::{Coloring, Instance};

/// Selection key; the smallest key is selected. Fewer free list colors is the
/// same as a larger unavailable degree since the palette size is fixed.
type Key = (u32, Reverse<u32>, Vertex);

fn key(state: &SearchState, v: Vertex) -> Key {
    (
        state.free_count(v) as u32,
        Reverse(state.uncolored_degree(v) as u32),
        v,
    )
}

pub trait VertexSelector {
    fn init(&mut self, state: &SearchState);
    /// Called after the color or the counters of `v` changed.
    fn refresh(&mut self, v: Vertex, state: &SearchState);
    fn select(&self, state: &SearchState) -> Option<Vertex>;
}

/// Scans every uncolored vertex on each call.
#[derive(Default)]
pub struct LinearScan;

impl VertexSelector for LinearScan {
    fn init(&mut self, _: &SearchState) {}

    fn refresh(&mut self, _: Vertex, _: &SearchState) {}

    fn select(&self, state: &SearchState) -> Option<Vertex> {
        (0..state.n())
            .filter(|&v| !state.is_colored(v))
            .min_by_key(|&v| key(state, v))
    }
}

/// Keeps uncolored vertices in an ordered set keyed by the selection rule.
#[derive(Default)]
pub struct PriorityQueue {
    keys: Vec<Option<Key>>,
    queue: BTreeSet<Key>,
}

impl VertexSelector for PriorityQueue {
    fn init(&mut self, state: &SearchState) {
        self.queue.clear();
        self.keys = vec![None; state.n()];
        for v in 0..state.n() {
            self.refresh(v, state);
        }
    }

    fn refresh(&mut self, v: Vertex, state: &SearchState) {
        if let Some(old) = self.keys[v].take() {
            self.queue.remove(&old);
        }
        if !state.is_colored(v) {
            let k = key(state, v);
            self.queue.insert(k);
            self.keys[v] = Some(k);
        }
    }

    fn select(&self, _: &SearchState) -> Option<Vertex> {
        self.queue.first().map(|&(_, _, v)| v)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SelectorKind {
    #[default]
    PriorityQueue,
    LinearScan,
}

impl SelectorKind {
    pub fn build(self) -> Box<dyn VertexSelector> {
        match self {
            SelectorKind::PriorityQueue => Box::new(PriorityQueue::default()),
            SelectorKind::LinearScan => Box::new(LinearScan),
        }
    }
}

/// Unavailable degree of `v` under a partial coloring, computed directly
/// from its definition over the palette.
pub fn unavailable_degree(inst: &Instance, partial: &Coloring, v: Vertex) -> usize {
    let g = inst.graph();
    inst.palette()
        .iter()
        .filter(|c| {
            inst.list(v).binary_search(c).is_err()
                || g.neighbors(v).iter().any(|&u| partial.get(u) == Some(**c))
        })
        .count()
}

/// The vertex the search would branch on next, or `None` when every vertex
/// is colored. `partial` must only use list colors.
pub fn select_next_vertex(inst: &Instance, partial: &Coloring) -> Option<Vertex> {
    let mut state = SearchState::new(inst);
    for v in 0..inst.n() {
        if let Some(c) = partial.get(v) {
            let s = state
                .slot_of(c)
                .expect("partial coloring uses palette colors");
            state.assign(v, s);
        }
    }
    LinearScan.select(&state)
}
