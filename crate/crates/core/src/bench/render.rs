//! CSV and text-table output. Both are produced from the same `CellResult`s.

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::grid::{CellResult, ChiRef, GridResult};
use super::{HarnessError, RunRecord, SolverKind};
use crate::outcome::Status;

/// One CSV row: one solver on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub n: usize,
    pub d_target: f64,
    pub d_realized: f64,
    pub c: f64,
    pub k: usize,
    pub instance_seed: u64,
    pub solver: SolverKind,
    pub status: Status,
    pub colors: Option<usize>,
    pub elapsed_ms: f64,
    pub nodes: Option<u64>,
    pub runs: Option<usize>,
    pub successes: Option<usize>,
    pub mean: Option<f64>,
    pub std: Option<f64>,
}

impl CsvRecord {
    pub fn new(cell: &CellResult, rec: &RunRecord) -> Self {
        let kgl = rec.kgl.as_ref();
        CsvRecord {
            n: cell.spec.n,
            d_target: cell.spec.d,
            d_realized: cell.d_realized,
            c: cell.spec.c,
            k: cell.spec.k,
            instance_seed: cell.spec.list_seed,
            solver: rec.solver,
            status: rec.status,
            colors: rec.colors,
            elapsed_ms: rec.elapsed_ms,
            nodes: rec.nodes,
            runs: kgl.map(|s| s.runs),
            successes: kgl.map(|s| s.successes),
            mean: kgl.and_then(|s| s.mean_colors),
            std: kgl.and_then(|s| s.std_colors),
        }
    }
}

pub fn csv_records(result: &GridResult) -> Vec<CsvRecord> {
    result
        .cells
        .iter()
        .flat_map(|cell| cell.records.iter().map(move |r| CsvRecord::new(cell, r)))
        .collect()
}

pub fn write_csv(result: &GridResult, out: impl Write) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    let err = |e: csv::Error| HarnessError::Io {
        path: "<csv>".into(),
        source: std::io::Error::other(e),
    };
    for rec in csv_records(result) {
        w.serialize(rec).map_err(err)?;
    }
    w.flush().map_err(|source| HarnessError::Io {
        path: "<csv>".into(),
        source,
    })
}

/// Table cell for one solver: the color count, `n/s` for proven
/// infeasibility, `X_n` for a best value found before the time limit
/// (search incomplete), blank when nothing was found. k-GL shows
/// `mean(std)` over its runs.
pub fn render_cell(rec: &RunRecord) -> String {
    if let Some(stats) = &rec.kgl {
        return stats.render();
    }
    match (rec.status, rec.colors) {
        (Status::Optimal | Status::Feasible, Some(c)) => c.to_string(),
        (Status::Timeout, Some(c)) => format!("{c}_n"),
        (Status::Infeasible, _) => "n/s".to_string(),
        _ => String::new(),
    }
}

pub fn render_chi(chi: ChiRef) -> String {
    match chi {
        ChiRef::Value(v) => v.to_string(),
        ChiRef::NoSolution => "n/s".to_string(),
        ChiRef::Unknown => "?".to_string(),
    }
}

const COLUMN_ORDER: [SolverKind; 5] = [
    SolverKind::Lc,
    SolverKind::Kgl,
    SolverKind::Elc,
    SolverKind::Dcc,
    SolverKind::Oracle,
];

fn header_name(s: SolverKind) -> &'static str {
    match s {
        SolverKind::Lc => "LC",
        SolverKind::Kgl => "k-GL",
        SolverKind::Elc => "ELC",
        SolverKind::Dcc => "dcc",
        SolverKind::Oracle => "oracle",
    }
}

/// Renders the grid as one block per graph size and one row per
/// `(d, graph, c)`, with a χ column and one column per solver for each list
/// length.
pub fn render_table(result: &GridResult) -> String {
    let grid = &result.grid;
    let solvers: Vec<SolverKind> = COLUMN_ORDER
        .into_iter()
        .filter(|s| grid.solvers.contains(s))
        .collect();

    let mut header = vec!["d".to_string(), "c".to_string(), "graph".to_string()];
    for &k in &grid.list_lengths {
        header.push(format!("chi_k={k}"));
        header.extend(solvers.iter().map(|&s| header_name(s).to_string()));
    }

    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    let cells = &result.cells;
    let per_row = grid.list_lengths.len();
    while i < cells.len() {
        let first = &cells[i];
        if blocks.last().is_none_or(|&(n, _)| n != first.spec.n) {
            blocks.push((first.spec.n, rows.len()));
        }
        let mut row = vec![
            format!("{}", first.spec.d),
            format!("{}", first.spec.c),
            format!("{}", first.spec.index),
        ];
        for cell in &cells[i..(i + per_row).min(cells.len())] {
            if let Some(err) = &cell.error {
                row.push(format!("error: {err}"));
                row.extend(solvers.iter().map(|_| String::new()));
                continue;
            }
            row.push(render_chi(cell.chi));
            for &s in &solvers {
                row.push(cell.record(s).map(render_cell).unwrap_or_default());
            }
        }
        rows.push(row);
        i += per_row;
    }

    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .chain(std::iter::once(&header[c]))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cols: &[String]| {
        let padded: Vec<String> = cols
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        format!("| {} |\n", padded.join(" | "))
    };

    let mut out = String::new();
    for (b, &(n, start)) in blocks.iter().enumerate() {
        let end = blocks.get(b + 1).map_or(rows.len(), |&(_, s)| s);
        out.push_str(&format!("|V| = {n}\n"));
        out.push_str(&line(&header));
        for row in &rows[start..end] {
            out.push_str(&line(row));
        }
        out.push('\n');
    }
    out
}
