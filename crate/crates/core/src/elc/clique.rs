//! Greedy cliques and lazy enumeration of the colorings used as restart seeds.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};
use crate::instance::{Color, Coloring, Instance};

/// Greedy clique: start at the vertex of largest degree and keep adding the
/// common neighbour of largest degree. Ties go to the smallest id. Returned
/// sorted by id; empty only for the empty graph.
pub fn find_clique(g: &Graph) -> Vec<Vertex> {
    find_clique_within(g, &vec![true; g.n()])
}

/// [`find_clique`] on the subgraph induced by the vertices with `allowed[v]`
/// set, with degrees counted inside that subgraph.
pub fn find_clique_within(g: &Graph, allowed: &[bool]) -> Vec<Vertex> {
    let degree: Vec<usize> = (0..g.n())
        .map(|v| g.neighbors(v).iter().filter(|&&u| allowed[u]).count())
        .collect();
    let pick = |candidates: &mut dyn Iterator<Item = Vertex>| {
        candidates.max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
    };
    let Some(first) = pick(&mut (0..g.n()).filter(|&v| allowed[v])) else {
        return Vec::new();
    };
    let mut clique = vec![first];
    let mut common: Vec<Vertex> = g
        .neighbors(first)
        .iter()
        .copied()
        .filter(|&u| allowed[u])
        .collect();
    while let Some(next) = pick(&mut common.iter().copied()) {
        clique.push(next);
        common.retain(|&u| u != next && g.is_edge(u, next));
    }
    clique.sort_unstable();
    clique
}

/// Depth-first enumeration of the proper list colorings of an instance,
/// vertices in id order and colors ascending, one coloring per call.
///
/// [`next_below`](Self::next_below) skips every branch whose distinct-color
/// count reaches the supplied bound, so restart seeds that cannot beat the
/// incumbent are never produced.
pub struct ColoringEnumerator {
    inst: Instance,
    pos: Vec<usize>,
    current: Vec<Option<Color>>,
    in_use: BTreeMap<Color, usize>,
    depth: usize,
    started: bool,
    done: bool,
}

impl ColoringEnumerator {
    pub fn new(inst: Instance) -> Self {
        let n = inst.n();
        ColoringEnumerator {
            inst,
            pos: vec![0; n],
            current: vec![None; n],
            in_use: BTreeMap::new(),
            depth: 0,
            started: false,
            done: false,
        }
    }

    pub fn instance(&self) -> &Instance {
        &self.inst
    }

    fn set(&mut self, v: Vertex, c: Color) {
        self.current[v] = Some(c);
        *self.in_use.entry(c).or_insert(0) += 1;
    }

    fn clear(&mut self, v: Vertex) {
        let c = self.current[v].take().expect("assigned");
        let count = self.in_use.get_mut(&c).unwrap();
        *count -= 1;
        if *count == 0 {
            self.in_use.remove(&c);
        }
    }

    /// Next coloring whose distinct-color count is below `bound`.
    pub fn next_below(&mut self, bound: usize) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let n = self.current.len();
        if !self.started {
            self.started = true;
        } else {
            if n == 0 {
                self.done = true;
                return None;
            }
            self.depth -= 1;
            self.clear(self.depth);
        }
        loop {
            if self.depth == n {
                if self.in_use.len() >= bound {
                    // only reachable when n == 0 and bound == 0
                    self.done = true;
                    return None;
                }
                return Some(Coloring::from_colors(
                    self.current.iter().map(|c| c.unwrap()),
                ));
            }
            let v = self.depth;
            let g = self.inst.graph();
            let mut chosen = None;
            while self.pos[v] < self.inst.list(v).len() {
                let c = self.inst.list(v)[self.pos[v]];
                self.pos[v] += 1;
                let clash = g
                    .neighbors(v)
                    .iter()
                    .any(|&u| u < v && self.current[u] == Some(c));
                let fresh = !self.in_use.contains_key(&c);
                if !clash && self.in_use.len() + usize::from(fresh) < bound {
                    chosen = Some(c);
                    break;
                }
            }
            match chosen {
                Some(c) => {
                    self.set(v, c);
                    self.depth += 1;
                    if self.depth < n {
                        self.pos[self.depth] = 0;
                    }
                }
                None if v == 0 => {
                    self.done = true;
                    return None;
                }
                None => {
                    self.depth -= 1;
                    self.clear(self.depth);
                }
            }
        }
    }
}

impl Iterator for ColoringEnumerator {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        self.next_below(usize::MAX)
    }
}

/// One feasible coloring of a clique: `colors[i]` goes on `clique[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueColoring {
    pub clique: Vec<Vertex>,
    pub colors: Vec<Color>,
}

impl CliqueColoring {
    /// As a partial coloring of the whole instance.
    pub fn to_partial(&self, n: usize) -> Coloring {
        let mut col = Coloring::uncolored(n);
        for (&v, &c) in self.clique.iter().zip(&self.colors) {
            col.set(v, Some(c));
        }
        col
    }
}

/// Every injective list-respecting coloring of `clique`, lazily. Clique
/// vertices are taken in id order and colors ascending.
pub fn enumerate_clique_colorings(
    inst: &Instance,
    clique: &[Vertex],
) -> impl Iterator<Item = CliqueColoring> {
    let mut vertices = clique.to_vec();
    vertices.sort_unstable();
    debug_assert!(vertices.iter().enumerate().all(|(i, &a)| vertices[i + 1..]
        .iter()
        .all(|&b| inst.graph().is_edge(a, b))));
    let sub = inst.induced(&vertices);
    ColoringEnumerator::new(sub).map(move |col| CliqueColoring {
        clique: vertices.clone(),
        colors: col.as_slice().iter().map(|c| c.unwrap()).collect(),
    })
}
