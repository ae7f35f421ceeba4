//! Reader and writer for the DIMACS `.col` graph format.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>
//! ```
//!
//! Endpoints are 1-based in the file and 0-based everywhere else.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge counts found while reading a `.col` file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimacsReport {
    pub declared_edges: usize,
    pub edge_lines: usize,
    pub distinct_edges: usize,
}

impl DimacsReport {
    pub fn is_consistent(&self) -> bool {
        self.declared_edges == self.distinct_edges
    }
}

/// Parses a `.col` file, logging a warning when the declared edge count does
/// not match the number of distinct edges.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let (graph, report) = parse_dimacs_with_report(text)?;
    if !report.is_consistent() {
        log::warn!(
            "DIMACS header declares {} edges, found {} distinct ({} edge lines)",
            report.declared_edges,
            report.distinct_edges,
            report.edge_lines
        );
    }
    Ok(graph)
}

pub fn parse_dimacs_with_report(text: &str) -> Result<(Graph, DimacsReport)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            line_no,
                            format!("expected `p edge`, found format {other:?}"),
                        ))
                    }
                }
                let n = number(tokens.next(), line_no, "vertex count")?;
                let m = number(tokens.next(), line_no, "edge count")?;
                trailing(tokens.next(), line_no)?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line_no, "edge line before problem line"));
                };
                let u = endpoint(tokens.next(), n, line_no)?;
                let v = endpoint(tokens.next(), n, line_no)?;
                trailing(tokens.next(), line_no)?;
                if u == v {
                    return Err(Error::parse(
                        line_no,
                        format!("self-loop on vertex {}", u + 1),
                    ));
                }
                edges.push((u, v));
            }
            Some(tag) => {
                return Err(Error::parse(line_no, format!("unknown line type `{tag}`")));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }

    let (n, declared) = header.ok_or_else(|| Error::parse(0, "missing `p edge` line"))?;
    let edge_lines = edges.len();
    let graph = Graph::new(n, edges)?;
    let report = DimacsReport {
        declared_edges: declared,
        edge_lines,
        distinct_edges: graph.m(),
    };
    Ok((graph, report))
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

fn endpoint(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let v = number(tok, line, "endpoint")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("endpoint {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn trailing(tok: Option<&str>, line: usize) -> Result<()> {
    match tok {
        None => Ok(()),
        Some(t) => Err(Error::parse(line, format!("unexpected token `{t}`"))),
    }
}

/// Writes `g` as a `.col` file with one `e` line per edge.
pub fn render_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
