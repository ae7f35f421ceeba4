//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.
//!
//! Set `LISTCOLOR_ACCEPT_TIME_S` to change the per-solve wall-clock limit used
//! on the benchmark grid (default 1 s).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use listcolor::bench::{
    csv_records, run_grid, run_solver, summarize_records, ExperimentGrid, GridResult, Profile,
    RunConfig, RunRecord, SolverKind,
};
use listcolor::dimacs::parse_dimacs;
use listcolor::elc::{dcc_solve, elc_solve, BbLimits};
use listcolor::generate::{mix_seed, GenConfig};
use listcolor::oracle::brute_force_opt;
use listcolor::{validate_coloring, Instance, SolveOutcome};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

const TENTHS: [f64; 5] = [0.1, 0.2, 0.3, 0.4, 0.5];

fn grid_seconds() -> f64 {
    std::env::var("LISTCOLOR_ACCEPT_TIME_S")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1.0)
}

/// Small random instances over the requested parameter ranges; combinations
/// with `k > floor(c·n)` are skipped.
fn small_instances(
    tag: u64,
    sizes: impl Iterator<Item = usize> + Clone,
    cs: &[f64],
    ks: &[usize],
    per_combo: u64,
) -> Vec<(GenConfig, Instance)> {
    let mut out = Vec::new();
    for n in sizes {
        for &d in &TENTHS {
            for &c in cs {
                for &k in ks {
                    for rep in 0..per_combo {
                        let cfg = GenConfig {
                            n,
                            d,
                            c,
                            k,
                            seed: mix_seed(&[
                                tag,
                                n as u64,
                                (d * 10.0) as u64,
                                (c * 10.0) as u64,
                                k as u64,
                                rep,
                            ]),
                        };
                        if let Ok(inst) = cfg.generate() {
                            out.push((cfg, inst));
                        }
                    }
                }
            }
        }
    }
    out
}

fn oracle_equivalence() -> Verdict {
    let instances = small_instances(1, 6..=12, &[0.3, 0.5, 1.0], &[2, 3, 4], 2);
    let limits = BbLimits::uncapped(Some(60.0));
    let mut mismatches = Vec::new();
    for (cfg, inst) in &instances {
        let want = brute_force_opt(inst).optimum();
        for (name, res) in [
            ("elc", elc_solve(inst, &limits)),
            ("dcc", dcc_solve(inst, &limits)),
        ] {
            let ok = match (&res.outcome, want) {
                (
                    SolveOutcome::Feasible {
                        proven_optimal: true,
                        ..
                    },
                    Some(v),
                ) => res.outcome.colors() == Some(v),
                (SolveOutcome::Infeasible, None) => true,
                _ => false,
            };
            if !ok {
                mismatches.push(format!(
                    "{name} {cfg:?}: {:?} vs {want:?}",
                    res.outcome.status()
                ));
            }
        }
    }
    verdict(
        instances.len() >= 300 && mismatches.is_empty(),
        format!(
            "{} instances, {} mismatches{}",
            instances.len(),
            mismatches.len(),
            mismatches
                .first()
                .map(|m| format!(" (first: {m})"))
                .unwrap_or_default()
        ),
    )
}

fn desk_grid() -> ExperimentGrid {
    let mut grid = ExperimentGrid::profile(Profile::Desk);
    grid.instances_per_cell = 2;
    grid.limits.wall_clock_seconds = Some(grid_seconds());
    grid
}

fn validity(result: &GridResult) -> Verdict {
    let mut checked = 0usize;
    let mut invalid = 0usize;
    for cell in result.cells.iter().filter(|c| c.error.is_none()) {
        let inst = cell.spec.instance().expect("grid cell regenerates");
        for rec in &cell.records {
            let mut colorings: Vec<_> = rec.coloring.iter().collect();
            if let Some(stats) = &rec.kgl {
                colorings.extend(stats.per_run.iter().filter_map(SolveOutcome::coloring));
            }
            for col in colorings {
                checked += 1;
                if !validate_coloring(&inst, col, true).is_valid() {
                    invalid += 1;
                }
            }
        }
    }
    verdict(
        invalid == 0 && checked > 0,
        format!("{checked} colorings re-validated, {invalid} invalid"),
    )
}

fn record(cell: &listcolor::bench::CellResult, s: SolverKind) -> Option<&RunRecord> {
    cell.record(s)
}

fn dcc_dominance(result: &GridResult) -> Verdict {
    let mut pairs = 0;
    let mut violations = 0;
    for cell in &result.cells {
        let (Some(e), Some(d)) = (record(cell, SolverKind::Elc), record(cell, SolverKind::Dcc))
        else {
            continue;
        };
        if !e.completed() || !d.completed() {
            continue;
        }
        pairs += 1;
        if d.colors.unwrap_or(usize::MAX) > e.colors.unwrap_or(usize::MAX) {
            violations += 1;
        }
    }
    verdict(
        violations == 0 && pairs > 0,
        format!("{pairs} completed pairs, {violations} violations"),
    )
}

fn certified_feasible(cell: &listcolor::bench::CellResult) -> bool {
    cell.records.iter().any(|r| r.colors.is_some())
}

fn kgl_feasibility(result: &GridResult) -> Verdict {
    let (mut runs, mut ok) = (0usize, 0usize);
    for cell in result.cells.iter().filter(|c| certified_feasible(c)) {
        if let Some(stats) = record(cell, SolverKind::Kgl).and_then(|r| r.kgl.as_ref()) {
            runs += stats.runs;
            ok += stats.successes;
        }
    }
    let rate = ok as f64 / runs.max(1) as f64;
    verdict(
        rate >= 0.70 && runs > 0,
        format!("single-run success {ok}/{runs} = {rate:.3} (need >= 0.70)"),
    )
}

fn quality_ordering(result: &GridResult) -> Verdict {
    let (mut cells, mut holding) = (0usize, 0usize);
    for cell in &result.cells {
        let lc = record(cell, SolverKind::Lc).and_then(|r| r.colors);
        let mean = record(cell, SolverKind::Kgl)
            .and_then(|r| r.kgl.as_ref())
            .and_then(|s| s.mean_colors);
        if let (Some(lc), Some(mean)) = (lc, mean) {
            cells += 1;
            if mean >= lc as f64 {
                holding += 1;
            }
        }
    }
    let frac = holding as f64 / cells.max(1) as f64;
    verdict(
        frac >= 0.90 && cells > 0,
        format!("mean k-GL >= LC in {holding}/{cells} = {frac:.3} (need >= 0.90)"),
    )
}

fn trends(result: &GridResult) -> Verdict {
    let report = summarize_records(&csv_records(result));
    let mut pass = true;
    let mut parts = Vec::new();
    for (label, name) in [
        ("a", "colors_nonincreasing_in_k"),
        ("b", "colors_nondecreasing_in_d"),
        ("c", "colors_nonincreasing_as_c_decreases"),
        ("d/d", "elc_nodes_nondecreasing_in_d"),
        ("d/k", "elc_nodes_nondecreasing_in_k"),
    ] {
        let t = report.trend(name).expect("trend is computed");
        let frac = t.fraction();
        pass &= frac.is_some_and(|f| f >= 0.80);
        parts.push(format!(
            "({label}) {}/{} = {}",
            t.holding,
            t.comparable,
            frac.map_or("n/a".into(), |f| format!("{f:.3}"))
        ));
    }
    verdict(pass, format!("{} (each needs >= 0.80)", parts.join(", ")))
}

fn lc_sensitivity() -> Verdict {
    let levels = [1.0, 0.9, 0.8, 0.5, 0.4, 0.3, 0.2, 0.1];
    let grid = ExperimentGrid {
        sizes: vec![50, 100],
        densities: TENTHS.to_vec(),
        color_factors: levels.to_vec(),
        list_lengths: vec![3, 4, 5],
        instances_per_cell: 2,
        master_seed: 2,
        solvers: vec![SolverKind::Lc],
        ..ExperimentGrid::profile(Profile::Desk)
    };
    let result = run_grid(&grid).expect("LC grid runs");
    let mut tally: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for cell in result.cells.iter().filter(|c| c.error.is_none()) {
        let e = tally
            .entry((cell.spec.c * 1000.0).round() as u64)
            .or_default();
        e.0 += 1;
        if record(cell, SolverKind::Lc).is_some_and(|r| r.colors.is_some()) {
            e.1 += 1;
        }
    }
    let rate = |c: f64| {
        let (n, ok) = tally[&((c * 1000.0).round() as u64)];
        (ok, n)
    };
    let (ok10, n10) = rate(1.0);
    let (ok09, n09) = rate(0.9);
    let (ok08, n08) = rate(0.8);
    let r = |ok: usize, n: usize| ok as f64 / n as f64;
    let (small_ok, small_n) = tally
        .iter()
        .filter(|(&c, _)| c <= 500)
        .fold((0, 0), |(a, b), (_, &(n, ok))| (a + ok, b + n));
    let fail_small = 1.0 - r(small_ok, small_n);
    let fail_full = 1.0 - r(ok10, n10);

    let pass = r(ok10, n10) >= 0.8
        && ok09 <= ok10 + 1
        && ok08 <= ok09 + 1
        && n10 == n09
        && n09 == n08
        && fail_small > fail_full;
    verdict(
        pass,
        format!(
            "success c=1.0 {ok10}/{n10}, c=0.9 {ok09}/{n09}, c=0.8 {ok08}/{n08}; failure c<=0.5 {fail_small:.3} vs c=1.0 {fail_full:.3}"
        ),
    )
}

/// Serialized record without the wall-clock field.
fn fingerprint(rec: &RunRecord) -> String {
    let mut v = serde_json::to_value(rec).expect("record serializes");
    v.as_object_mut()
        .expect("record is an object")
        .remove("elapsed_ms");
    v.to_string()
}

fn determinism() -> Verdict {
    let cfg = RunConfig {
        limits: BbLimits {
            wall_clock_seconds: None,
            ..BbLimits::default()
        },
        kgl_runs: 10,
        seed: 77,
    };
    let instances = small_instances(3, [14usize, 20].into_iter(), &[0.5], &[3, 4], 1);
    let mut compared = 0;
    let mut differing = Vec::new();
    for (gen, inst) in &instances {
        for solver in SolverKind::ALL {
            if solver == SolverKind::Oracle && inst.n() > 14 {
                continue;
            }
            let a = run_solver(inst, solver, &cfg).expect("solver runs");
            let b = run_solver(inst, solver, &cfg).expect("solver runs");
            compared += 1;
            if fingerprint(&a) != fingerprint(&b) {
                differing.push(format!("{solver} on {gen:?}"));
            }
        }
    }
    verdict(
        differing.is_empty() && compared > 0,
        format!(
            "{compared} repeated runs, {} differed{}",
            differing.len(),
            differing
                .first()
                .map(|d| format!(" (first: {d})"))
                .unwrap_or_default()
        ),
    )
}

fn pruning_safety() -> Verdict {
    let instances = small_instances(4, 5..=9, &[0.5, 1.0], &[2, 3], 2);
    let on = BbLimits::uncapped(None);
    let off = BbLimits {
        prune: false,
        ..on.clone()
    };
    let mut mismatches = 0;
    for (_, inst) in &instances {
        let a = elc_solve(inst, &on).outcome;
        let b = elc_solve(inst, &off).outcome;
        if a.colors() != b.colors() || a.status() != b.status() || !a.is_proven() {
            mismatches += 1;
        }
    }
    verdict(
        instances.len() >= 100 && mismatches == 0,
        format!("{} instances, {mismatches} mismatches", instances.len()),
    )
}

fn dimacs_fixtures() -> Verdict {
    let table: [(&str, usize, f64, f64); 6] = [
        ("david", 87, 0.11, 9.33),
        ("huck", 74, 0.11, 8.14),
        ("jean", 80, 0.08, 6.35),
        ("queen8_12", 96, 0.30, 28.5),
        ("queen8_8", 64, 0.36, 22.75),
        ("queen9_9", 81, 0.33, 26.07),
    ];
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/dimacs");
    let round2 = |x: f64| (x * 100.0).round() / 100.0;
    let mut matched = Vec::new();
    let mut problems = Vec::new();
    for (name, n, density, mean_deg) in table {
        let path = dir.join(format!("{name}.col"));
        let Ok(text) = fs::read_to_string(&path) else {
            problems.push(format!("{name}: fixture not available"));
            continue;
        };
        match parse_dimacs(&text) {
            Ok(g)
                if g.n() == n
                    && round2(g.density()) == density
                    && round2(g.mean_degree()) == mean_deg =>
            {
                matched.push(name)
            }
            Ok(g) => problems.push(format!(
                "{name}: got {} {:.2} {:.2}",
                g.n(),
                g.density(),
                g.mean_degree()
            )),
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }
    verdict(
        problems.is_empty(),
        format!(
            "matched {} of 6 [{}]; {}",
            matched.len(),
            matched.join(", "),
            problems.join("; ")
        ),
    )
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |name: &str, f: &dyn Fn() -> Verdict| {
        let start = Instant::now();
        let v = f();
        println!(
            "{} {name}: {} [{:.1}s]",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
        if !v.pass {
            failed += 1;
        }
    };

    report("oracle_equivalence", &oracle_equivalence);
    report("pruning_safety", &pruning_safety);
    report("determinism", &determinism);
    report("dimacs_fixtures", &dimacs_fixtures);
    report("lc_color_range_sensitivity", &lc_sensitivity);

    let start = Instant::now();
    let grid = desk_grid();
    let result = run_grid(&grid).expect("desk grid runs without invalid colorings");
    println!(
        "desk grid: sizes {:?}, {} instances per cell, {} s per solve, {} list instances in {:.1}s",
        grid.sizes,
        grid.instances_per_cell,
        grid_seconds(),
        result.cells.iter().filter(|c| c.error.is_none()).count(),
        start.elapsed().as_secs_f64()
    );
    report("validity", &|| validity(&result));
    report("dcc_dominance", &|| dcc_dominance(&result));
    report("kgl_feasibility", &|| kgl_feasibility(&result));
    report("quality_ordering", &|| quality_ordering(&result));
    report("trends", &|| trends(&result));

    println!("{} criteria failed", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
