//! Randomised greedy list coloring (k-GL), generalised to arbitrary lists.
//!
//! Each step picks an uncolored vertex with the fewest remaining colors
//! (uniform tie-break), gives it a uniformly random remaining color and
//! strikes that color from the lists of its uncolored neighbours. A selected
//! vertex with an empty list ends the run as a failure.
//!
//! Both draws come from one `ChaCha8Rng` per run: the vertex draw first,
//! then the color draw.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::generate::{mix_seed, rng_from_seed};
use crate::graph::Vertex;
use crate::instance::{Color, Coloring, Instance};
use crate::outcome::SolveOutcome;

/// One k-GL run with the sequence of choices it made.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KglRun {
    pub outcome: SolveOutcome,
    pub steps: Vec<(Vertex, Color)>,
}

pub fn kgl_solve(inst: &Instance, seed: u64) -> SolveOutcome {
    kgl_run(inst, seed).outcome
}

pub fn kgl_run(inst: &Instance, seed: u64) -> KglRun {
    let g = inst.graph();
    let n = inst.n();
    let mut rng = rng_from_seed(seed);
    let mut remaining: Vec<Vec<Color>> = inst.lists().to_vec();
    let mut coloring = Coloring::uncolored(n);
    let mut uncolored: Vec<Vertex> = (0..n).collect();
    let mut steps = Vec::with_capacity(n);
    let mut ties = Vec::new();

    while !uncolored.is_empty() {
        let fewest = uncolored.iter().map(|&v| remaining[v].len()).min().unwrap();
        ties.clear();
        ties.extend(
            uncolored
                .iter()
                .enumerate()
                .filter(|&(_, &v)| remaining[v].len() == fewest)
                .map(|(pos, _)| pos),
        );
        let pos = ties[rng.random_range(0..ties.len())];
        let v = uncolored[pos];
        if fewest == 0 {
            return KglRun {
                outcome: SolveOutcome::HeuristicFailure,
                steps,
            };
        }
        let color = remaining[v][rng.random_range(0..remaining[v].len())];
        uncolored.swap_remove(pos);
        coloring.set(v, Some(color));
        steps.push((v, color));
        for &u in g.neighbors(v) {
            if coloring.get(u).is_none() {
                if let Ok(i) = remaining[u].binary_search(&color) {
                    remaining[u].remove(i);
                }
            }
        }
    }

    KglRun {
        outcome: SolveOutcome::Feasible {
            coloring,
            proven_optimal: false,
        },
        steps,
    }
}

/// Aggregate over repeated k-GL runs. Mean and standard deviation
/// (population formula) are taken over successful runs only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KglRunStats {
    pub runs: usize,
    pub successes: usize,
    pub mean_colors: Option<f64>,
    pub std_colors: Option<f64>,
    #[serde(skip)]
    pub per_run: Vec<SolveOutcome>,
}

impl KglRunStats {
    pub fn from_outcomes(per_run: Vec<SolveOutcome>) -> Self {
        let counts: Vec<f64> = per_run
            .iter()
            .filter_map(|o| match o {
                SolveOutcome::Feasible { coloring, .. } => Some(coloring.distinct_count() as f64),
                _ => None,
            })
            .collect();
        let (mean, std) = if counts.is_empty() {
            (None, None)
        } else {
            let mean = counts.iter().sum::<f64>() / counts.len() as f64;
            let var = counts.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / counts.len() as f64;
            (Some(mean), Some(var.sqrt()))
        };
        KglRunStats {
            runs: per_run.len(),
            successes: counts.len(),
            mean_colors: mean,
            std_colors: std,
            per_run,
        }
    }

    /// `mean(std)` to one decimal, or an empty string when no run succeeded.
    pub fn render(&self) -> String {
        match (self.mean_colors, self.std_colors) {
            (Some(m), Some(s)) => format!("{m:.1}({s:.1})"),
            _ => String::new(),
        }
    }

    /// Fewest colors over successful runs.
    pub fn best_colors(&self) -> Option<usize> {
        self.per_run.iter().filter_map(SolveOutcome::colors).min()
    }
}

/// Seed of run `run` in a multi-run batch.
pub fn run_seed(seed: u64, run: usize) -> u64 {
    mix_seed(&[seed, run as u64])
}

pub fn kgl_multi(inst: &Instance, runs: usize, seed: u64) -> KglRunStats {
    assert!(runs >= 1, "k-GL needs at least one run");
    let per_run: Vec<SolveOutcome> = (0..runs)
        .into_par_iter()
        .map(|r| kgl_solve(inst, run_seed(seed, r)))
        .collect();
    KglRunStats::from_outcomes(per_run)
}
