//! Incremental bookkeeping for the branch-and-bound search.
//!
//! Colors are mapped to dense palette indices. For every vertex we track how
//! many colored neighbours hold each palette color, how many of its own list
//! colors are still free, and how many neighbours are uncolored. Assigning and
//! unassigning are exact inverses so the search can backtrack in place.

use crate::graph::{Graph, Vertex};
use crate::instance::{Color, Coloring, Instance};

pub(crate) type Slot = u32;

pub struct SearchState<'a> {
    pub(crate) graph: &'a Graph,
    pub(crate) palette: &'a [Color],
    /// Palette indices of each list, ascending.
    pub(crate) lists: Vec<Vec<Slot>>,
    in_list: Vec<bool>,
    /// `blocked[v * P + p]`: colored neighbours of `v` holding color `p`.
    blocked: Vec<u32>,
    free: Vec<u32>,
    uncolored_deg: Vec<u32>,
    pub(crate) assigned: Vec<Option<Slot>>,
    in_use: Vec<u32>,
    distinct: usize,
    uncolored: usize,
}

impl<'a> SearchState<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        let graph = inst.graph();
        let palette = inst.palette();
        let n = inst.n();
        let p = palette.len();
        let lists: Vec<Vec<Slot>> = inst
            .lists()
            .iter()
            .map(|l| {
                l.iter()
                    .map(|c| {
                        palette
                            .binary_search(c)
                            .expect("list colors are in the palette")
                            as Slot
                    })
                    .collect()
            })
            .collect();
        let mut in_list = vec![false; n * p];
        for (v, l) in lists.iter().enumerate() {
            for &s in l {
                in_list[v * p + s as usize] = true;
            }
        }
        SearchState {
            graph,
            palette,
            free: lists.iter().map(|l| l.len() as u32).collect(),
            uncolored_deg: (0..n).map(|v| graph.degree(v) as u32).collect(),
            lists,
            in_list,
            blocked: vec![0; n * p],
            assigned: vec![None; n],
            in_use: vec![0; p],
            distinct: 0,
            uncolored: n,
        }
    }

    pub fn n(&self) -> usize {
        self.assigned.len()
    }

    pub fn palette_len(&self) -> usize {
        self.palette.len()
    }

    pub fn slot_of(&self, c: Color) -> Option<Slot> {
        self.palette.binary_search(&c).ok().map(|s| s as Slot)
    }

    pub fn is_colored(&self, v: Vertex) -> bool {
        self.assigned[v].is_some()
    }

    pub fn uncolored_count(&self) -> usize {
        self.uncolored
    }

    pub fn distinct(&self) -> usize {
        self.distinct
    }

    /// List colors of `v` not held by any colored neighbour.
    pub fn free_count(&self, v: Vertex) -> usize {
        self.free[v] as usize
    }

    /// Palette colors `v` cannot take: off-list or held by a colored neighbour.
    pub fn unavailable_degree(&self, v: Vertex) -> usize {
        self.palette.len() - self.free[v] as usize
    }

    pub fn uncolored_degree(&self, v: Vertex) -> usize {
        self.uncolored_deg[v] as usize
    }

    pub fn is_free(&self, v: Vertex, s: Slot) -> bool {
        let p = self.palette.len();
        self.in_list[v * p + s as usize] && self.blocked[v * p + s as usize] == 0
    }

    pub fn is_fresh(&self, s: Slot) -> bool {
        self.in_use[s as usize] == 0
    }

    pub fn assign(&mut self, v: Vertex, s: Slot) {
        debug_assert!(self.assigned[v].is_none());
        let p = self.palette.len();
        self.assigned[v] = Some(s);
        self.uncolored -= 1;
        if self.in_use[s as usize] == 0 {
            self.distinct += 1;
        }
        self.in_use[s as usize] += 1;
        let graph = self.graph;
        for &u in graph.neighbors(v) {
            self.uncolored_deg[u] -= 1;
            let i = u * p + s as usize;
            if self.blocked[i] == 0 && self.in_list[i] {
                self.free[u] -= 1;
            }
            self.blocked[i] += 1;
        }
    }

    pub fn unassign(&mut self, v: Vertex) {
        let s = self.assigned[v].take().expect("vertex is colored");
        let p = self.palette.len();
        self.uncolored += 1;
        self.in_use[s as usize] -= 1;
        if self.in_use[s as usize] == 0 {
            self.distinct -= 1;
        }
        let graph = self.graph;
        for &u in graph.neighbors(v) {
            self.uncolored_deg[u] += 1;
            let i = u * p + s as usize;
            self.blocked[i] -= 1;
            if self.blocked[i] == 0 && self.in_list[i] {
                self.free[u] += 1;
            }
        }
    }

    pub fn to_coloring(&self) -> Coloring {
        let mut col = Coloring::uncolored(self.n());
        for (v, s) in self.assigned.iter().enumerate() {
            col.set(v, s.map(|s| self.palette[s as usize]));
        }
        col
    }
}
