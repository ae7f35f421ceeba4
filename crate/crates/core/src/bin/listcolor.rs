use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use listcolor::bench::{
    render_table, run_grid, run_single, summarize, write_csv, ExperimentGrid, HarnessError,
    Profile, RunConfig, SolverKind,
};
use listcolor::dimacs::{parse_dimacs, render_dimacs};
use listcolor::elc::BbLimits;
use listcolor::generate::{gen_lists, GenConfig};
use listcolor::instance::{serialize_instance, Instance};

#[derive(Parser)]
#[command(
    name = "listcolor",
    version,
    about = "List coloring solvers and benchmark harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance (or lists for an existing graph).
    Gen(GenArgs),
    /// Run one solver on one instance and print a JSON report.
    Solve(SolveArgs),
    /// Run an experiment grid.
    Bench(BenchArgs),
    /// Aggregate benchmark CSVs and check the expected trends.
    Summarize(SummarizeArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, required_unless_present = "graph")]
    n: Option<usize>,
    #[arg(long, default_value_t = 0.1)]
    density: f64,
    #[arg(long, default_value_t = 0.1)]
    color_factor: f64,
    #[arg(long, default_value_t = 3)]
    list_length: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Generate lists for this DIMACS graph instead of a random graph.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Where to write the DIMACS graph (random graphs only).
    #[arg(long)]
    out_graph: Option<PathBuf>,
    /// Where to write the list file; stdout when omitted.
    #[arg(long)]
    out_lists: Option<PathBuf>,
    /// Append the edges to the list file.
    #[arg(long)]
    inline_edges: bool,
}

#[derive(Args, Clone)]
struct LimitArgs {
    /// Wall-clock budget per branch-and-bound solve, in seconds.
    #[arg(long)]
    time_limit_s: Option<f64>,
    /// Node expansions per restart; 0 disables the cap.
    #[arg(long)]
    iteration_cap: Option<u64>,
    #[arg(long)]
    kgl_runs: Option<usize>,
}

impl LimitArgs {
    fn apply(&self, limits: &mut BbLimits, kgl_runs: &mut usize) {
        if let Some(t) = self.time_limit_s {
            limits.wall_clock_seconds = (t > 0.0).then_some(t);
        }
        if let Some(cap) = self.iteration_cap {
            limits.iteration_cap = (cap > 0).then_some(cap);
        }
        if let Some(r) = self.kgl_runs {
            *kgl_runs = r;
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// DIMACS graph; omit when the list file carries inline edges.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    lists: PathBuf,
    #[arg(long)]
    solver: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Desk,
    Paper,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "desk")]
    profile: ProfileArg,
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    densities: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    color_factors: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    list_lengths: Option<Vec<usize>>,
    #[arg(long)]
    instances_per_cell: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    solvers: Option<Vec<String>>,
    #[arg(long)]
    workers: Option<usize>,
    #[command(flatten)]
    limits: LimitArgs,
    #[arg(long)]
    out_csv: Option<PathBuf>,
    /// Where to write the text table; stdout when omitted.
    #[arg(long)]
    out_table: Option<PathBuf>,
}

#[derive(Args)]
struct SummarizeArgs {
    #[arg(required = true)]
    csv: Vec<PathBuf>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_owned(),
        source,
    }
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), HarnessError> {
    match path {
        Some(p) => fs::write(p, text).map_err(io_err(p)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: GenArgs) -> Result<(), HarnessError> {
    let inst = match &args.graph {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(io_err(path))?;
            let g = parse_dimacs(&text).map_err(|source| HarnessError::Parse {
                path: path.clone(),
                source,
            })?;
            let lists = gen_lists(g.n(), args.color_factor, args.list_length, args.seed)
                .map_err(|e| HarnessError::Config(e.to_string()))?;
            Instance::new(g, lists).map_err(|e| HarnessError::Config(e.to_string()))?
        }
        None => GenConfig {
            n: args.n.expect("clap enforces --n without --graph"),
            d: args.density,
            c: args.color_factor,
            k: args.list_length,
            seed: args.seed,
        }
        .generate()
        .map_err(|e| HarnessError::Config(e.to_string()))?,
    };
    if let Some(p) = &args.out_graph {
        fs::write(p, render_dimacs(inst.graph())).map_err(io_err(p))?;
    }
    write_or_print(
        args.out_lists.as_deref(),
        &serialize_instance(&inst, args.inline_edges),
    )
}

fn solve(args: SolveArgs) -> Result<(), HarnessError> {
    let solver: SolverKind = args.solver.parse().map_err(HarnessError::Config)?;
    let mut cfg = RunConfig {
        seed: args.seed,
        ..RunConfig::default()
    };
    args.limits.apply(&mut cfg.limits, &mut cfg.kgl_runs);
    let report = run_single(args.graph.as_deref(), &args.lists, solver, &cfg)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}

fn bench(args: BenchArgs) -> Result<(), HarnessError> {
    let mut grid = ExperimentGrid::profile(match args.profile {
        ProfileArg::Desk => Profile::Desk,
        ProfileArg::Paper => Profile::Paper,
    });
    if let Some(v) = args.sizes {
        grid.sizes = v;
    }
    if let Some(v) = args.densities {
        grid.densities = v;
    }
    if let Some(v) = args.color_factors {
        grid.color_factors = v;
    }
    if let Some(v) = args.list_lengths {
        grid.list_lengths = v;
    }
    if let Some(v) = args.instances_per_cell {
        grid.instances_per_cell = v;
    }
    if let Some(v) = args.seed {
        grid.master_seed = v;
    }
    if let Some(v) = args.workers {
        grid.workers = v;
    }
    if let Some(names) = args.solvers {
        grid.solvers = names
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, _>>()
            .map_err(HarnessError::Config)?;
    }
    args.limits.apply(&mut grid.limits, &mut grid.kgl_runs);
    if grid.densities.iter().any(|d| !(0.0..=1.0).contains(d)) {
        return Err(HarnessError::Config("densities must lie in [0, 1]".into()));
    }

    let result = run_grid(&grid)?;
    if let Some(p) = &args.out_csv {
        let file = fs::File::create(p).map_err(io_err(p))?;
        write_csv(&result, file)?;
    }
    write_or_print(args.out_table.as_deref(), &render_table(&result))
}

fn summarize_cmd(args: SummarizeArgs) -> Result<(), HarnessError> {
    let paths: Vec<&Path> = args.csv.iter().map(PathBuf::as_path).collect();
    print!("{}", summarize(&paths)?.render());
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Bench(a) => bench(a),
        Command::Summarize(a) => summarize_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
