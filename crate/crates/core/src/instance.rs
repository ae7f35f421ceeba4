//! List coloring instances, colorings and their validity check.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A color id. Colors are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u32);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A graph together with one availability list per vertex.
///
/// Lists are stored sorted and duplicate-free. The palette is the union of
/// all lists and is derived once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    graph: Arc<Graph>,
    lists: Vec<Vec<Color>>,
    palette: Vec<Color>,
}

impl Instance {
    pub fn new(graph: impl Into<Arc<Graph>>, lists: Vec<Vec<Color>>) -> Result<Self> {
        let graph = graph.into();
        if lists.len() != graph.n() {
            return Err(Error::Config(format!(
                "{} lists given for {} vertices",
                lists.len(),
                graph.n()
            )));
        }
        let mut lists = lists;
        for (v, list) in lists.iter_mut().enumerate() {
            if list.iter().any(|c| c.0 == 0) {
                return Err(Error::Config(format!("vertex {v} lists color 0")));
            }
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(Error::Config(format!("vertex {v} lists a color twice")));
            }
        }
        let palette: BTreeSet<Color> = lists.iter().flatten().copied().collect();
        Ok(Instance {
            graph,
            lists,
            palette: palette.into_iter().collect(),
        })
    }

    /// Convenience constructor from raw `u32` color lists.
    pub fn from_raw(graph: Graph, lists: &[&[u32]]) -> Result<Self> {
        let lists = lists
            .iter()
            .map(|l| l.iter().map(|&c| Color(c)).collect())
            .collect();
        Instance::new(graph, lists)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    /// Union of every availability list, ascending.
    pub fn palette(&self) -> &[Color] {
        &self.palette
    }

    pub fn max_list_len(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Restriction to the induced subgraph on `vertices`, keeping their lists.
    pub fn induced(&self, vertices: &[Vertex]) -> Instance {
        let lists = vertices.iter().map(|&v| self.lists[v].clone()).collect();
        Instance::new(self.graph.induced(vertices), lists)
            .expect("sub-instance of a valid instance")
    }
}

/// A (possibly partial) assignment of colors to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<Option<Color>>);

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring(vec![None; n])
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Self {
        Coloring(colors.into_iter().map(Some).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.0[v]
    }

    pub fn set(&mut self, v: Vertex, c: Option<Color>) {
        self.0[v] = c;
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.0
    }

    /// Number of distinct colors in the image of the assignment.
    pub fn distinct_count(&self) -> usize {
        self.0.iter().flatten().collect::<BTreeSet<_>>().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Assigned color is not in the vertex's list.
    OffList {
        vertex: Vertex,
        color: Color,
    },
    /// Both endpoints of an edge carry the same color.
    Monochromatic {
        u: Vertex,
        v: Vertex,
        color: Color,
    },
    Uncolored {
        vertex: Vertex,
    },
    /// Coloring length differs from the vertex count.
    WrongLength {
        expected: usize,
        found: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every way `col` fails to be a proper list coloring of `inst`.
/// Uncolored vertices are violations only when `require_total` is set.
pub fn validate_coloring(inst: &Instance, col: &Coloring, require_total: bool) -> ValidityReport {
    let mut violations = Vec::new();
    if col.len() != inst.n() {
        violations.push(Violation::WrongLength {
            expected: inst.n(),
            found: col.len(),
        });
        return ValidityReport { violations };
    }
    for v in 0..inst.n() {
        match col.get(v) {
            Some(color) if inst.list(v).binary_search(&color).is_err() => {
                violations.push(Violation::OffList { vertex: v, color })
            }
            None if require_total => violations.push(Violation::Uncolored { vertex: v }),
            _ => {}
        }
    }
    for (u, v) in inst.graph().edges() {
        if let (Some(a), Some(b)) = (col.get(u), col.get(v)) {
            if a == b {
                violations.push(Violation::Monochromatic { u, v, color: a });
            }
        }
    }
    ValidityReport { violations }
}

/// Writes the list file for `inst`: an `l <n> <k_max>` header, one
/// `v <id> <colors...>` line per vertex and, when `inline_edges` is set,
/// the graph as `e` lines after the list block.
pub fn serialize_instance(inst: &Instance, inline_edges: bool) -> String {
    use std::fmt::Write as _;
    let mut out = format!("l {} {}\n", inst.n(), inst.max_list_len());
    for v in 0..inst.n() {
        let _ = write!(out, "v {}", v + 1);
        for c in inst.list(v) {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    if inline_edges {
        for (u, v) in inst.graph().edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
    }
    out
}

/// Contents of a list file before it is joined with a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListFile {
    pub n: usize,
    pub k_max: usize,
    pub lists: Vec<Vec<Color>>,
    /// `e` lines following the list block, 0-based.
    pub edges: Option<Vec<(Vertex, Vertex)>>,
}

pub fn parse_list_file(text: &str) -> Result<ListFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut lists: Vec<Option<Vec<Color>>> = Vec::new();
    let mut edges: Option<Vec<(Vertex, Vertex)>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let ints = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("invalid integer `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        match tag {
            "c" => {}
            "l" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate `l` header"));
                }
                let [n, k_max] = ints[..] else {
                    return Err(Error::parse(line_no, "expected `l <n> <k_max>`"));
                };
                header = Some((n, k_max));
                lists = vec![None; n];
            }
            "v" => {
                let Some((n, k_max)) = header else {
                    return Err(Error::parse(line_no, "vertex line before `l` header"));
                };
                if edges.is_some() {
                    return Err(Error::parse(line_no, "vertex line after edge block"));
                }
                let Some((&id, colors)) = ints.split_first() else {
                    return Err(Error::parse(line_no, "missing vertex id"));
                };
                if id == 0 || id > n {
                    return Err(Error::parse(
                        line_no,
                        format!("vertex {id} outside 1..={n}"),
                    ));
                }
                if colors.len() > k_max {
                    return Err(Error::parse(
                        line_no,
                        format!("list of length {} exceeds k_max {k_max}", colors.len()),
                    ));
                }
                let mut list = Vec::with_capacity(colors.len());
                for &c in colors {
                    let c = u32::try_from(c)
                        .ok()
                        .filter(|&c| c >= 1)
                        .ok_or_else(|| Error::parse(line_no, format!("invalid color {c}")))?;
                    list.push(Color(c));
                }
                list.sort_unstable();
                if list.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::parse(line_no, "color repeated in list"));
                }
                if lists[id - 1].replace(list).is_some() {
                    return Err(Error::parse(line_no, format!("vertex {id} listed twice")));
                }
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line_no, "edge line before `l` header"));
                };
                let [u, v] = ints[..] else {
                    return Err(Error::parse(line_no, "expected `e <u> <v>`"));
                };
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(Error::parse(line_no, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop on vertex {u}")));
                }
                edges.get_or_insert_with(Vec::new).push((u - 1, v - 1));
            }
            other => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown line type `{other}`"),
                ))
            }
        }
    }

    let (n, k_max) = header.ok_or_else(|| Error::parse(0, "missing `l` header"))?;
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::parse(0, format!("no list for vertex {}", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ListFile {
        n,
        k_max,
        lists,
        edges,
    })
}

/// Parses a self-contained list file (lists plus inline `e` lines).
pub fn parse_instance(text: &str) -> Result<Instance> {
    let file = parse_list_file(text)?;
    let graph = Graph::new(file.n, file.edges.unwrap_or_default())?;
    Instance::new(graph, file.lists)
}

/// Joins a list file with a separately supplied graph.
pub fn attach_lists(graph: impl Into<Arc<Graph>>, file: ListFile) -> Result<Instance> {
    let graph = graph.into();
    if file.n != graph.n() {
        return Err(Error::Config(format!(
            "list file has {} vertices, graph has {}",
            file.n,
            graph.n()
        )));
    }
    if file.edges.is_some() {
        return Err(Error::Config(
            "list file carries inline edges but a graph file was also given".into(),
        ));
    }
    Instance::new(graph, file.lists)
}
