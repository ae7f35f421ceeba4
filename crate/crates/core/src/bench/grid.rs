use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{run_solver, HarnessError, RunConfig, RunRecord, SolverKind};
use crate::elc::BbLimits;
use crate::generate::{gen_lists, gen_random_graph, milli, mix_seed};
use crate::graph::Graph;
use crate::instance::Instance;
use crate::oracle::brute_force_opt;
use crate::outcome::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// |V| in {20, 35, 50}, 30 s per branch-and-bound solve.
    Desk,
    /// |V| in {50, 100, 150, 200}, 1800 s per branch-and-bound solve.
    Paper,
}

/// The cartesian product of experiment parameters plus per-run limits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentGrid {
    pub sizes: Vec<usize>,
    pub densities: Vec<f64>,
    pub color_factors: Vec<f64>,
    pub list_lengths: Vec<usize>,
    /// Random graphs per `(|V|, d)`; each carries one list instance per `(c, k)`.
    pub instances_per_cell: usize,
    pub master_seed: u64,
    pub solvers: Vec<SolverKind>,
    pub limits: BbLimits,
    pub kgl_runs: usize,
    /// The oracle fills the χ column up to this many vertices.
    pub oracle_max_n: usize,
    /// Worker threads; 0 uses rayon's default.
    pub workers: usize,
}

const TENTHS: [f64; 5] = [0.1, 0.2, 0.3, 0.4, 0.5];

impl ExperimentGrid {
    pub fn profile(profile: Profile) -> Self {
        let (sizes, seconds) = match profile {
            Profile::Desk => (vec![20, 35, 50], 30.0),
            Profile::Paper => (vec![50, 100, 150, 200], 1800.0),
        };
        ExperimentGrid {
            sizes,
            densities: TENTHS.to_vec(),
            color_factors: TENTHS.to_vec(),
            list_lengths: vec![3, 4, 5],
            instances_per_cell: 10,
            master_seed: 1,
            solvers: vec![
                SolverKind::Kgl,
                SolverKind::Lc,
                SolverKind::Elc,
                SolverKind::Dcc,
            ],
            limits: BbLimits {
                wall_clock_seconds: Some(seconds),
                ..BbLimits::default()
            },
            kgl_runs: 10,
            oracle_max_n: 14,
            workers: 0,
        }
    }

    /// Every list instance of the grid in output order: size, density,
    /// graph index, color factor, list length.
    pub fn instances(&self) -> Vec<InstanceSpec> {
        let mut out = Vec::new();
        for &n in &self.sizes {
            for &d in &self.densities {
                for index in 0..self.instances_per_cell {
                    let graph_seed =
                        mix_seed(&[self.master_seed, n as u64, milli(d), index as u64]);
                    for &c in &self.color_factors {
                        for &k in &self.list_lengths {
                            out.push(InstanceSpec {
                                n,
                                d,
                                index,
                                c,
                                k,
                                graph_seed,
                                list_seed: mix_seed(&[graph_seed, milli(c), k as u64]),
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

/// Identifies one generated list instance.
///
/// `graph_seed = mix(master_seed, n, 1000·d, index)` and
/// `list_seed = mix(graph_seed, 1000·c, k)`, so all `(c, k)` variants of a
/// graph share it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub n: usize,
    pub d: f64,
    pub index: usize,
    pub c: f64,
    pub k: usize,
    pub graph_seed: u64,
    pub list_seed: u64,
}

impl InstanceSpec {
    pub fn graph(&self) -> Graph {
        gen_random_graph(self.n, self.d, self.graph_seed)
    }

    pub fn instance_with(&self, graph: Arc<Graph>) -> crate::Result<Instance> {
        let lists = gen_lists(self.n, self.c, self.k, self.list_seed)?;
        Instance::new(graph, lists)
    }

    pub fn instance(&self) -> crate::Result<Instance> {
        self.instance_with(Arc::new(self.graph()))
    }
}

/// Reference optimum for the χ column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiRef {
    Value(usize),
    /// No list coloring exists.
    NoSolution,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellResult {
    pub spec: InstanceSpec,
    pub d_realized: f64,
    pub chi: ChiRef,
    pub records: Vec<RunRecord>,
    /// Generation failure for this cell (e.g. `k > floor(c·n)`).
    pub error: Option<String>,
}

impl CellResult {
    pub fn record(&self, solver: SolverKind) -> Option<&RunRecord> {
        self.records.iter().find(|r| r.solver == solver)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridResult {
    pub grid: ExperimentGrid,
    pub cells: Vec<CellResult>,
}

fn chi_reference(inst: &Instance, records: &[RunRecord], oracle_max_n: usize) -> ChiRef {
    if let Some(r) = records.iter().find(|r| r.solver == SolverKind::Oracle) {
        return match r.colors {
            Some(v) => ChiRef::Value(v),
            None => ChiRef::NoSolution,
        };
    }
    if inst.n() <= oracle_max_n {
        return match brute_force_opt(inst).optimum() {
            Some(v) => ChiRef::Value(v),
            None => ChiRef::NoSolution,
        };
    }
    for solver in [SolverKind::Elc, SolverKind::Dcc] {
        if let Some(r) = records.iter().find(|r| r.solver == solver) {
            match r.status {
                Status::Optimal => return ChiRef::Value(r.colors.expect("optimal has colors")),
                Status::Infeasible => return ChiRef::NoSolution,
                _ => {}
            }
        }
    }
    ChiRef::Unknown
}

fn run_cell(grid: &ExperimentGrid, spec: InstanceSpec) -> Result<CellResult, HarnessError> {
    let graph = Arc::new(spec.graph());
    let d_realized = graph.density();
    let inst = match spec.instance_with(graph) {
        Ok(inst) => inst,
        Err(e) => {
            return Ok(CellResult {
                spec,
                d_realized,
                chi: ChiRef::Unknown,
                records: Vec::new(),
                error: Some(e.to_string()),
            })
        }
    };
    let cfg = RunConfig {
        limits: grid.limits.clone(),
        kgl_runs: grid.kgl_runs,
        seed: spec.list_seed,
    };
    let records = grid
        .solvers
        .iter()
        .map(|&s| run_solver(&inst, s, &cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let chi = chi_reference(&inst, &records, grid.oracle_max_n);
    Ok(CellResult {
        spec,
        d_realized,
        chi,
        records,
        error: None,
    })
}

/// Runs every selected solver on every instance of the grid. Cells run on a
/// bounded worker pool; results come back in grid order. An invalid coloring
/// from any solver aborts the whole run.
pub fn run_grid(grid: &ExperimentGrid) -> Result<GridResult, HarnessError> {
    use rayon::prelude::*;

    let specs = grid.instances();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(grid.workers)
        .build()
        .map_err(|e| HarnessError::Config(e.to_string()))?;
    let cells = pool.install(|| {
        specs
            .into_par_iter()
            .map(|spec| run_cell(grid, spec))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(GridResult {
        grid: grid.clone(),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> ExperimentGrid {
        ExperimentGrid {
            sizes: vec![8],
            densities: vec![0.2, 0.5],
            color_factors: vec![0.3, 0.5],
            list_lengths: vec![2, 3],
            instances_per_cell: 2,
            solvers: SolverKind::ALL.to_vec(),
            limits: BbLimits {
                wall_clock_seconds: Some(10.0),
                ..BbLimits::default()
            },
            ..ExperimentGrid::profile(Profile::Desk)
        }
    }

    #[test]
    fn grid_order_and_seeds() {
        let g = tiny();
        let specs = g.instances();
        assert_eq!(specs.len(), 2 * 2 * 2 * 2);
        assert_eq!(
            (specs[0].d, specs[0].index, specs[0].c, specs[0].k),
            (0.2, 0, 0.3, 2)
        );
        assert_eq!(specs[1].k, 3);
        // (c, k) variants share the graph
        assert!(specs[..4]
            .iter()
            .all(|s| s.graph_seed == specs[0].graph_seed));
        assert_ne!(specs[0].list_seed, specs[1].list_seed);
        assert_ne!(specs[0].graph_seed, specs[4].graph_seed);
    }

    #[test]
    fn oracle_fills_chi_and_agrees() {
        let res = run_grid(&tiny()).unwrap();
        for cell in res.cells.iter().filter(|c| c.error.is_none()) {
            let oracle = cell.record(SolverKind::Oracle).unwrap();
            let chi = match cell.chi {
                ChiRef::Value(v) => Some(v),
                ChiRef::NoSolution => None,
                ChiRef::Unknown => panic!("oracle should decide n = 8"),
            };
            assert_eq!(oracle.colors, chi);
            for s in [SolverKind::Elc, SolverKind::Dcc] {
                let r = cell.record(s).unwrap();
                if r.status == Status::Optimal {
                    assert_eq!(r.colors, chi);
                }
                if r.status == Status::Infeasible {
                    assert_eq!(chi, None);
                }
            }
        }
    }

    #[test]
    fn bad_cells_do_not_abort() {
        let grid = ExperimentGrid {
            color_factors: vec![0.1],
            list_lengths: vec![3],
            ..tiny()
        };
        let res = run_grid(&grid).unwrap();
        assert!(res
            .cells
            .iter()
            .all(|c| c.error.is_some() && c.records.is_empty()));
    }
}
