//! Undirected simple graphs with constant-time adjacency queries.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// 0-based vertex index.
pub type Vertex = usize;

/// An immutable undirected simple graph.
///
/// Neighbourhoods are kept twice: as sorted lists for iteration and as a
/// dense bit matrix so `is_edge` is a single word probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    neighbors: Vec<Vec<Vertex>>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs (in either orientation)
    /// are collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &set {
            neighbors[u].push(v);
            neighbors[v].push(u);
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            m: set.len(),
            neighbors,
            words,
            bits,
        })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is always valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Edge density `2m / (n(n-1))`; zero for graphs with fewer than two vertices.
    pub fn density(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        2.0 * self.m as f64 / (self.n as f64 * (self.n as f64 - 1.0))
    }

    pub fn mean_degree(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        2.0 * self.m as f64 / self.n as f64
    }

    /// Population standard deviation of the degree sequence.
    pub fn degree_std_dev(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        let mean = self.mean_degree();
        let var = (0..self.n)
            .map(|v| (self.degree(v) as f64 - mean).powi(2))
            .sum::<f64>()
            / self.n as f64;
        var.sqrt()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let edges = (0..vertices.len()).flat_map(|i| {
            (i + 1..vertices.len())
                .filter(move |&j| self.is_edge(vertices[i], vertices[j]))
                .map(move |j| (i, j))
        });
        Graph::new(vertices.len(), edges.collect::<Vec<_>>())
            .expect("induced subgraph of a simple graph is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn path_graph() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!((0..3).map(|v| g.degree(v)).collect::<Vec<_>>(), [1, 2, 1]);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn degrees() {
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(3), 0);
        let k5 = Graph::complete(5);
        assert!((0..5).all(|v| k5.degree(v) == 4));
        assert_eq!(k5.density(), 1.0);
    }

    #[test]
    fn induced_keeps_only_inner_edges() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let h = g.induced(&[0, 1, 3]);
        assert_eq!(h.n(), 3);
        assert!(h.is_edge(0, 1) && h.is_edge(0, 2) && !h.is_edge(1, 2));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..40).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..200).prop_map(move |pairs| {
                Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn handshake(g in arb_graph()) {
            let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            prop_assert_eq!(total, 2 * g.m());
            prop_assert_eq!(g.edges().count(), g.m());
        }

        #[test]
        fn adjacency_symmetric(g in arb_graph()) {
            for u in 0..g.n() {
                prop_assert!(!g.is_edge(u, u));
                for v in 0..g.n() {
                    prop_assert_eq!(g.is_edge(u, v), g.is_edge(v, u));
                    prop_assert_eq!(g.is_edge(u, v), g.neighbors(u).contains(&v));
                }
            }
        }
    }
}
