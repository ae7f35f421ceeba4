//! Benchmark harness: solver dispatch, experiment grids, table and CSV
//! output, and trend summaries.

mod grid;
mod render;
mod summarize;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use grid::{run_grid, CellResult, ChiRef, ExperimentGrid, GridResult, InstanceSpec, Profile};
pub use render::{csv_records, render_cell, render_table, write_csv, CsvRecord};
pub use summarize::{
    read_csv, summarize, summarize_records, Aggregate, HeadToHead, TrendCheck, TrendReport,
};

use crate::elc::{dcc_solve, elc_solve, BbLimits};
use crate::instance::{validate_coloring, Coloring, Instance, Violation};
use crate::kgl::{kgl_multi, KglRunStats};
use crate::lc::lc_solve;
use crate::oracle::{brute_force_opt, OracleStatus};
use crate::outcome::{SolveOutcome, Status};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: crate::Error },
    #[error("{0}")]
    Config(String),
    #[error("{solver} returned an invalid coloring: {violations:?}")]
    InvalidColoring {
        solver: SolverKind,
        violations: Vec<Violation>,
    },
    #[error("{path}: record {record}: {msg}")]
    Csv {
        path: PathBuf,
        record: usize,
        msg: String,
    },
}

impl HarnessError {
    /// Process exit code: 1 for usage and configuration problems, 2 for I/O
    /// and parse failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) | HarnessError::InvalidColoring { .. } => 1,
            HarnessError::Io { .. } | HarnessError::Parse { .. } | HarnessError::Csv { .. } => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Kgl,
    Lc,
    Elc,
    Dcc,
    Oracle,
}

impl SolverKind {
    pub const ALL: [SolverKind; 5] = [
        SolverKind::Kgl,
        SolverKind::Lc,
        SolverKind::Elc,
        SolverKind::Dcc,
        SolverKind::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SolverKind::Kgl => "kgl",
            SolverKind::Lc => "lc",
            SolverKind::Elc => "elc",
            SolverKind::Dcc => "dcc",
            SolverKind::Oracle => "oracle",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown solver `{s}` (expected kgl, lc, elc, dcc or oracle)"))
    }
}

/// Everything a single solver run needs besides the instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub limits: BbLimits,
    pub kgl_runs: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            limits: BbLimits::default(),
            kgl_runs: 10,
            seed: 0,
        }
    }
}

/// One solver's result on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord {
    pub solver: SolverKind,
    pub status: Status,
    /// Distinct colors of the returned coloring (best run for k-GL).
    pub colors: Option<usize>,
    pub elapsed_ms: f64,
    pub nodes: Option<u64>,
    pub kgl: Option<KglRunStats>,
    pub coloring: Option<Coloring>,
}

impl RunRecord {
    pub fn completed(&self) -> bool {
        self.status != Status::Timeout
    }
}

/// Runs `solver` on `inst` and re-validates whatever coloring it returns.
pub fn run_solver(
    inst: &Instance,
    solver: SolverKind,
    cfg: &RunConfig,
) -> Result<RunRecord, HarnessError> {
    let start = Instant::now();
    let (outcome, nodes, kgl) = match solver {
        SolverKind::Kgl => {
            let stats = kgl_multi(inst, cfg.kgl_runs.max(1), cfg.seed);
            let best = stats
                .per_run
                .iter()
                .filter(|o| o.coloring().is_some())
                .min_by_key(|o| o.colors())
                .cloned()
                .unwrap_or(SolveOutcome::HeuristicFailure);
            (best, None, Some(stats))
        }
        SolverKind::Lc => (lc_solve(inst), None, None),
        SolverKind::Elc => {
            let res = elc_solve(inst, &cfg.limits);
            (res.outcome, Some(res.nodes), None)
        }
        SolverKind::Dcc => {
            let res = dcc_solve(inst, &cfg.limits);
            (res.outcome, Some(res.nodes), None)
        }
        SolverKind::Oracle => {
            let res = brute_force_opt(inst);
            let outcome = match res.status {
                OracleStatus::Optimal { witness, .. } => SolveOutcome::Feasible {
                    coloring: witness,
                    proven_optimal: true,
                },
                OracleStatus::Infeasible => SolveOutcome::Infeasible,
            };
            (outcome, Some(res.nodes), None)
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut to_check: Vec<&Coloring> = outcome.coloring().into_iter().collect();
    if let Some(stats) = &kgl {
        to_check.extend(stats.per_run.iter().filter_map(SolveOutcome::coloring));
    }
    for col in to_check {
        let report = validate_coloring(inst, col, true);
        if !report.is_valid() {
            return Err(HarnessError::InvalidColoring {
                solver,
                violations: report.violations,
            });
        }
    }

    Ok(RunRecord {
        solver,
        status: outcome.status(),
        colors: outcome.colors(),
        elapsed_ms,
        nodes,
        kgl,
        coloring: outcome.coloring().cloned(),
    })
}

/// Machine-readable report of one `solve` invocation.
#[derive(Clone, Debug, Serialize)]
pub struct SingleReport {
    pub solver: SolverKind,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub status: Status,
    pub colors: Option<usize>,
    pub valid: bool,
    pub elapsed_ms: f64,
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kgl: Option<KglRunStats>,
    pub coloring: Option<Coloring>,
}

fn read(path: &Path) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Loads an instance from a list file and an optional DIMACS graph. Without
/// a graph file the list file must carry the edges inline.
pub fn load_instance(graph: Option<&Path>, lists: &Path) -> Result<Instance, HarnessError> {
    let list_text = read(lists)?;
    let parse_err = |path: &Path| {
        let path = path.to_owned();
        move |source| HarnessError::Parse { path, source }
    };
    let file = crate::instance::parse_list_file(&list_text).map_err(parse_err(lists))?;
    match graph {
        Some(gpath) => {
            let g = crate::dimacs::parse_dimacs(&read(gpath)?).map_err(parse_err(gpath))?;
            crate::instance::attach_lists(g, file).map_err(parse_err(lists))
        }
        None => {
            let g = crate::graph::Graph::new(file.n, file.edges.unwrap_or_default())
                .map_err(parse_err(lists))?;
            Instance::new(g, file.lists).map_err(parse_err(lists))
        }
    }
}

pub fn run_single(
    graph: Option<&Path>,
    lists: &Path,
    solver: SolverKind,
    cfg: &RunConfig,
) -> Result<SingleReport, HarnessError> {
    let inst = load_instance(graph, lists)?;
    let rec = run_solver(&inst, solver, cfg)?;
    Ok(SingleReport {
        solver,
        seed: cfg.seed,
        n: inst.n(),
        m: inst.graph().m(),
        status: rec.status,
        colors: rec.colors,
        valid: true,
        elapsed_ms: rec.elapsed_ms,
        nodes: rec.nodes,
        kgl: rec.kgl,
        coloring: rec.coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn solver_names() {
        for k in SolverKind::ALL {
            assert_eq!(k.as_str().parse::<SolverKind>(), Ok(k));
        }
        assert!("dsatur".parse::<SolverKind>().is_err());
    }

    #[test]
    fn every_solver_on_triangle() {
        let inst = Instance::from_raw(Graph::complete(3), &[&[1, 2, 3][..]; 3]).unwrap();
        let cfg = RunConfig::default();
        for solver in SolverKind::ALL {
            let rec = run_solver(&inst, solver, &cfg).unwrap();
            assert_eq!(rec.colors, Some(3), "{solver}");
        }
        let oracle = run_solver(&inst, SolverKind::Oracle, &cfg).unwrap();
        assert_eq!(oracle.status, Status::Optimal);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(HarnessError::Config("x".into()).exit_code(), 1);
        let io = HarnessError::Io {
            path: "x".into(),
            source: std::io::Error::other("boom"),
        };
        assert_eq!(io.exit_code(), 2);
    }
}
