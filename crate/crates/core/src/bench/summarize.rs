//! Aggregates over benchmark CSVs and the qualitative trend checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use super::render::CsvRecord;
use super::{HarnessError, SolverKind};
use crate::outcome::Status;

pub fn read_csv(path: &Path) -> Result<Vec<CsvRecord>, HarnessError> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| HarnessError::Io {
        path: path.to_owned(),
        source: std::io::Error::other(e),
    })?;
    reader
        .deserialize()
        .enumerate()
        .map(|(i, r)| {
            r.map_err(|e| HarnessError::Csv {
                path: path.to_owned(),
                record: i + 1,
                msg: e.to_string(),
            })
        })
        .collect()
}

/// Totally ordered key for a fraction given in thousandths.
type Milli = u64;

fn milli(x: f64) -> Milli {
    (x * 1000.0).round() as Milli
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CellKey {
    pub n: usize,
    pub d_milli: Milli,
    pub c_milli: Milli,
    pub k: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SolverAggregate {
    pub rows: usize,
    /// Rows that returned a coloring.
    pub successes: usize,
    pub mean_colors: Option<f64>,
    pub completed: usize,
    /// Median search nodes over instances some solver colored.
    pub median_nodes: Option<f64>,
    /// Single k-GL runs and how many of them succeeded.
    pub single_runs: usize,
    pub single_successes: usize,
}

/// Everything known about one `(n, d, c, k)` cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Aggregate {
    pub key: CellKey,
    pub instances: usize,
    /// Instances where some solver found a coloring.
    pub feasible: usize,
    /// Mean over feasible instances of the fewest colors any solver found.
    pub mean_best: Option<f64>,
    pub solvers: BTreeMap<SolverKind, SolverAggregate>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HeadToHead {
    /// Instances where both ELC and dcc ran to completion.
    pub pairs: usize,
    pub ties: usize,
    pub dcc_wins: usize,
    pub elc_wins: usize,
}

impl HeadToHead {
    /// dcc never worse than ELC when both completed.
    pub fn dcc_dominates(&self) -> bool {
        self.elc_wins == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrendCheck {
    pub name: &'static str,
    pub holding: usize,
    pub comparable: usize,
}

impl TrendCheck {
    /// Fraction of comparable pairs on which the trend holds, `None` when
    /// there is nothing to compare.
    pub fn fraction(&self) -> Option<f64> {
        (self.comparable > 0).then(|| self.holding as f64 / self.comparable as f64)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrendReport {
    pub aggregates: Vec<Aggregate>,
    pub head_to_head: HeadToHead,
    pub trends: Vec<TrendCheck>,
}

impl TrendReport {
    pub fn trend(&self, name: &str) -> Option<&TrendCheck> {
        self.trends.iter().find(|t| t.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cells: {}", self.aggregates.len());
        for a in &self.aggregates {
            let _ = write!(
                out,
                "n={} d={} c={} k={} instances={} feasible={} best={}",
                a.key.n,
                a.key.d_milli as f64 / 1000.0,
                a.key.c_milli as f64 / 1000.0,
                a.key.k,
                a.instances,
                a.feasible,
                fmt_opt(a.mean_best)
            );
            for (s, agg) in &a.solvers {
                let _ = write!(
                    out,
                    " | {s}: {}/{} ok, colors={}",
                    agg.successes,
                    agg.rows,
                    fmt_opt(agg.mean_colors)
                );
                if let Some(nodes) = agg.median_nodes {
                    let _ = write!(out, ", nodes~{nodes}");
                }
            }
            out.push('\n');
        }
        let h = &self.head_to_head;
        let _ =
            writeln!(
            out,
            "ELC vs dcc (both completed): pairs={} ties={} dcc_wins={} elc_wins={} dominance={}",
            h.pairs,
            h.ties,
            h.dcc_wins,
            h.elc_wins,
            if h.dcc_dominates() { "holds" } else { "violated" }
        );
        for t in &self.trends {
            match t.fraction() {
                Some(f) => {
                    let _ = writeln!(
                        out,
                        "trend {}: {}/{} ({:.1}%)",
                        t.name,
                        t.holding,
                        t.comparable,
                        f * 100.0
                    );
                }
                None => {
                    let _ = writeln!(out, "trend {}: n/a", t.name);
                }
            }
        }
        out
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.2}"))
}

fn mean(xs: &[f64]) -> Option<f64> {
    (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64)
}

fn median(mut xs: Vec<f64>) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    Some(if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    })
}

const EPS: f64 = 1e-9;

pub fn summarize(paths: &[&Path]) -> Result<TrendReport, HarnessError> {
    if paths.is_empty() {
        return Err(HarnessError::Config(
            "summarize needs at least one CSV".into(),
        ));
    }
    let mut records = Vec::new();
    for p in paths {
        records.extend(read_csv(p)?);
    }
    Ok(summarize_records(&records))
}

pub fn summarize_records(records: &[CsvRecord]) -> TrendReport {
    // instance -> solver -> row
    let mut by_instance: BTreeMap<(CellKey, u64), BTreeMap<SolverKind, &CsvRecord>> =
        BTreeMap::new();
    for r in records {
        let key = CellKey {
            n: r.n,
            d_milli: milli(r.d_target),
            c_milli: milli(r.c),
            k: r.k,
        };
        by_instance
            .entry((key, r.instance_seed))
            .or_default()
            .insert(r.solver, r);
    }

    let mut head = HeadToHead::default();
    let mut cells: BTreeMap<CellKey, Vec<&BTreeMap<SolverKind, &CsvRecord>>> = BTreeMap::new();
    for ((key, _), rows) in &by_instance {
        cells.entry(*key).or_default().push(rows);
        if let (Some(e), Some(d)) = (rows.get(&SolverKind::Elc), rows.get(&SolverKind::Dcc)) {
            if e.status != Status::Timeout && d.status != Status::Timeout {
                head.pairs += 1;
                let e = e.colors.unwrap_or(usize::MAX);
                let d = d.colors.unwrap_or(usize::MAX);
                match d.cmp(&e) {
                    std::cmp::Ordering::Less => head.dcc_wins += 1,
                    std::cmp::Ordering::Equal => head.ties += 1,
                    std::cmp::Ordering::Greater => head.elc_wins += 1,
                }
            }
        }
    }

    let aggregates: Vec<Aggregate> = cells
        .into_iter()
        .map(|(key, instances)| {
            let bests: Vec<f64> = instances
                .iter()
                .filter_map(|rows| rows.values().filter_map(|r| r.colors).min())
                .map(|c| c as f64)
                .collect();
            let mut solvers: BTreeMap<SolverKind, SolverAggregate> = BTreeMap::new();
            for s in SolverKind::ALL {
                let rows: Vec<&CsvRecord> = instances
                    .iter()
                    .filter_map(|m| m.get(&s).copied())
                    .collect();
                if rows.is_empty() {
                    continue;
                }
                let colors: Vec<f64> = rows
                    .iter()
                    .filter_map(|r| r.colors)
                    .map(|c| c as f64)
                    .collect();
                // search effort on infeasible instances only measures how
                // fast infeasibility is detected, so it is left out
                let nodes: Vec<f64> = instances
                    .iter()
                    .filter(|m| m.values().any(|r| r.colors.is_some()))
                    .filter_map(|m| m.get(&s).and_then(|r| r.nodes))
                    .map(|n| n as f64)
                    .collect();
                solvers.insert(
                    s,
                    SolverAggregate {
                        rows: rows.len(),
                        successes: colors.len(),
                        mean_colors: mean(&colors),
                        completed: rows.iter().filter(|r| r.status != Status::Timeout).count(),
                        median_nodes: median(nodes),
                        single_runs: rows.iter().filter_map(|r| r.runs).sum(),
                        single_successes: rows.iter().filter_map(|r| r.successes).sum(),
                    },
                );
            }
            Aggregate {
                key,
                instances: instances.len(),
                feasible: bests.len(),
                mean_best: mean(&bests),
                solvers,
            }
        })
        .collect();

    let best = |a: &Aggregate| a.mean_best;
    let elc_nodes = |a: &Aggregate| a.solvers.get(&SolverKind::Elc).and_then(|s| s.median_nodes);
    let trends = vec![
        trend(
            &aggregates,
            "colors_nonincreasing_in_k",
            Axis::K,
            best,
            |lo, hi| hi <= lo + EPS,
        ),
        trend(
            &aggregates,
            "colors_nondecreasing_in_d",
            Axis::D,
            best,
            |lo, hi| hi + EPS >= lo,
        ),
        trend(
            &aggregates,
            "colors_nonincreasing_as_c_decreases",
            Axis::C,
            best,
            |lo, hi| lo <= hi + EPS,
        ),
        trend(
            &aggregates,
            "elc_nodes_nondecreasing_in_d",
            Axis::D,
            elc_nodes,
            |lo, hi| hi + EPS >= lo,
        ),
        trend(
            &aggregates,
            "elc_nodes_nondecreasing_in_k",
            Axis::K,
            elc_nodes,
            |lo, hi| hi + EPS >= lo,
        ),
    ];

    TrendReport {
        aggregates,
        head_to_head: head,
        trends,
    }
}

#[derive(Clone, Copy)]
enum Axis {
    D,
    C,
    K,
}

/// Compares each pair of adjacent levels along `axis` with every other
/// coordinate fixed. `holds(lower_level_value, higher_level_value)`.
fn trend(
    aggregates: &[Aggregate],
    name: &'static str,
    axis: Axis,
    value: impl Fn(&Aggregate) -> Option<f64>,
    holds: impl Fn(f64, f64) -> bool,
) -> TrendCheck {
    let mut lines: BTreeMap<(usize, u64, u64), Vec<(u64, f64)>> = BTreeMap::new();
    for a in aggregates {
        let Some(v) = value(a) else { continue };
        let k = a.key;
        let (fixed, level) = match axis {
            Axis::D => ((k.n, k.c_milli, k.k as u64), k.d_milli),
            Axis::C => ((k.n, k.d_milli, k.k as u64), k.c_milli),
            Axis::K => ((k.n, k.d_milli, k.c_milli), k.k as u64),
        };
        lines.entry(fixed).or_default().push((level, v));
    }
    let mut check = TrendCheck {
        name,
        holding: 0,
        comparable: 0,
    };
    for mut line in lines.into_values() {
        line.sort_by_key(|&(level, _)| level);
        for w in line.windows(2) {
            check.comparable += 1;
            if holds(w[0].1, w[1].1) {
                check.holding += 1;
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(
        d: f64,
        c: f64,
        k: usize,
        seed: u64,
        solver: SolverKind,
        status: Status,
        colors: Option<usize>,
    ) -> CsvRecord {
        CsvRecord {
            n: 20,
            d_target: d,
            d_realized: d,
            c,
            k,
            instance_seed: seed,
            solver,
            status,
            colors,
            elapsed_ms: 1.0,
            nodes: Some(10),
            runs: None,
            successes: None,
            mean: None,
            std: None,
        }
    }

    #[test]
    fn single_cell_has_no_trends() {
        let rep = summarize_records(&[row(
            0.1,
            0.3,
            3,
            1,
            SolverKind::Elc,
            Status::Optimal,
            Some(4),
        )]);
        assert_eq!(rep.aggregates.len(), 1);
        assert!(rep.trends.iter().all(|t| t.fraction().is_none()));
        assert!(rep.render().contains("n/a"));
    }

    #[test]
    fn dominance_counts_completed_pairs_only() {
        let rows = vec![
            row(0.1, 0.3, 3, 1, SolverKind::Elc, Status::Feasible, Some(5)),
            row(0.1, 0.3, 3, 1, SolverKind::Dcc, Status::Feasible, Some(4)),
            row(0.1, 0.3, 3, 2, SolverKind::Elc, Status::Optimal, Some(4)),
            row(0.1, 0.3, 3, 2, SolverKind::Dcc, Status::Optimal, Some(4)),
            // dcc worse but timed out: not a completed pair
            row(0.1, 0.3, 3, 3, SolverKind::Elc, Status::Feasible, Some(4)),
            row(0.1, 0.3, 3, 3, SolverKind::Dcc, Status::Timeout, Some(6)),
        ];
        let h = summarize_records(&rows).head_to_head;
        assert_eq!(
            h,
            HeadToHead {
                pairs: 2,
                ties: 1,
                dcc_wins: 1,
                elc_wins: 0
            }
        );
        assert!(h.dcc_dominates());

        let bad = vec![
            row(0.1, 0.3, 3, 1, SolverKind::Elc, Status::Feasible, Some(4)),
            row(0.1, 0.3, 3, 1, SolverKind::Dcc, Status::NoSolution, None),
        ];
        assert!(!summarize_records(&bad).head_to_head.dcc_dominates());
    }

    #[test]
    fn trends_along_each_axis() {
        let rows = vec![
            row(0.1, 0.3, 3, 1, SolverKind::Elc, Status::Optimal, Some(5)),
            row(0.1, 0.3, 4, 2, SolverKind::Elc, Status::Optimal, Some(4)),
            row(0.2, 0.3, 3, 3, SolverKind::Elc, Status::Optimal, Some(6)),
            row(0.1, 0.5, 3, 4, SolverKind::Elc, Status::Optimal, Some(7)),
        ];
        let rep = summarize_records(&rows);
        let f = |name| rep.trend(name).unwrap().clone();
        assert_eq!(
            f("colors_nonincreasing_in_k"),
            TrendCheck {
                name: "colors_nonincreasing_in_k",
                holding: 1,
                comparable: 1
            }
        );
        assert_eq!(f("colors_nondecreasing_in_d").fraction(), Some(1.0));
        assert_eq!(
            f("colors_nonincreasing_as_c_decreases").fraction(),
            Some(1.0)
        );
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), Some(2.5));
        assert_eq!(median(vec![]), None);
    }
}
