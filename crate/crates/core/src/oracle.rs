//! Exhaustive list coloring optimiser for small instances.
//!
//! Deliberately shares nothing with the branch-and-bound solvers: it keeps
//! its own adjacency matrix and color bookkeeping and walks vertices in id
//! order, trying every list color that does not clash with an earlier
//! neighbour.

use std::collections::HashMap;

use serde::Serialize;

use crate::instance::{Color, Coloring, Instance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleStatus {
    Optimal { count: usize, witness: Coloring },
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub status: OracleStatus,
    /// Color assignments tried.
    pub nodes: u64,
}

impl OracleResult {
    pub fn optimum(&self) -> Option<usize> {
        match self.status {
            OracleStatus::Optimal { count, .. } => Some(count),
            OracleStatus::Infeasible => None,
        }
    }
}

/// Minimum number of distinct colors over all proper list colorings.
///
/// Prunes a branch once its distinct-color count reaches the best complete
/// coloring found so far; the count never decreases down a branch, so the
/// optimum is unchanged. [`brute_force_exhaustive`] is the unpruned variant.
pub fn brute_force_opt(inst: &Instance) -> OracleResult {
    Enumerator::new(inst, true).run()
}

/// Visits every proper list coloring.
pub fn brute_force_exhaustive(inst: &Instance) -> OracleResult {
    Enumerator::new(inst, false).run()
}

struct Enumerator<'a> {
    inst: &'a Instance,
    adjacent: Vec<Vec<bool>>,
    bound: bool,
    current: Vec<Option<Color>>,
    in_use: HashMap<Color, usize>,
    best: Option<(usize, Vec<Option<Color>>)>,
    nodes: u64,
}

impl<'a> Enumerator<'a> {
    fn new(inst: &'a Instance, bound: bool) -> Self {
        let n = inst.n();
        let mut adjacent = vec![vec![false; n]; n];
        for (u, v) in inst.graph().edges() {
            adjacent[u][v] = true;
            adjacent[v][u] = true;
        }
        Enumerator {
            inst,
            adjacent,
            bound,
            current: vec![None; n],
            in_use: HashMap::new(),
            best: None,
            nodes: 0,
        }
    }

    fn run(mut self) -> OracleResult {
        self.visit(0);
        let status = match self.best {
            Some((count, colors)) => OracleStatus::Optimal {
                count,
                witness: Coloring::from_colors(colors.into_iter().map(|c| c.unwrap())),
            },
            None => OracleStatus::Infeasible,
        };
        OracleResult {
            status,
            nodes: self.nodes,
        }
    }

    fn visit(&mut self, v: usize) {
        let distinct = self.in_use.len();
        if v == self.current.len() {
            if self.best.as_ref().is_none_or(|(b, _)| distinct < *b) {
                self.best = Some((distinct, self.current.clone()));
            }
            return;
        }
        for &c in self.inst.list(v) {
            let clash = (0..v).any(|u| self.adjacent[u][v] && self.current[u] == Some(c));
            if clash {
                continue;
            }
            let fresh = !self.in_use.contains_key(&c);
            if self.bound {
                if let Some((b, _)) = &self.best {
                    if distinct + usize::from(fresh) >= *b {
                        continue;
                    }
                }
            }
            self.nodes += 1;
            self.current[v] = Some(c);
            *self.in_use.entry(c).or_insert(0) += 1;
            self.visit(v + 1);
            let slot = self.in_use.get_mut(&c).unwrap();
            *slot -= 1;
            if *slot == 0 {
                self.in_use.remove(&c);
            }
            self.current[v] = None;
        }
    }
}
