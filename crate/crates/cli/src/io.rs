//! Text and JSON formats.
//!
//! Edge lists hold one `u v` pair per line; `#` starts a comment. Because a
//! bare edge list cannot express isolated vertices with the largest ids,
//! the writer emits a `# vertices N` comment which the reader honors when
//! present.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tokenpower_core::graph::EdgeId;
use tokenpower_core::groups::Presentation;
use tokenpower_core::linalg::SparseMatrix;
use tokenpower_core::{AbelianGroupDesc, Graph, PowerGraph, PowerKind, TwoComplex};

use crate::error::{CliError, Result};

const VERTICES_DIRECTIVE: &str = "vertices";

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut words = c.split_whitespace();
            if words.next() == Some(VERTICES_DIRECTIVE) {
                if let Some(Ok(n)) = words.next().map(str::parse::<usize>) {
                    declared = Some((n, line));
                }
            }
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [a, b] => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| CliError::Parse {
                        line,
                        message: format!("{s:?} is not a non-negative vertex id"),
                    })
                };
                edges.push((parse(a)?, parse(b)?, line));
            }
            _ => {
                return Err(CliError::Parse {
                    line,
                    message: format!("expected two vertex ids, found {}", fields.len()),
                })
            }
        }
    }
    let inferred = edges.iter().map(|&(a, b, _)| a.max(b) + 1).max().unwrap_or(0);
    let t = match declared {
        Some((n, line)) if n < inferred => {
            return Err(CliError::Parse {
                line,
                message: format!("declared {n} vertices but ids reach {}", inferred - 1),
            })
        }
        Some((n, _)) => n,
        None => inferred,
    };
    let mut seen = std::collections::BTreeMap::new();
    for &(a, b, line) in &edges {
        if a == b {
            return Err(CliError::Parse { line, message: format!("self-loop at {a}") });
        }
        if let Some(first) = seen.insert(EdgeId::new(a, b), line) {
            return Err(CliError::Parse {
                line,
                message: format!("edge {a}-{b} already given on line {first}"),
            });
        }
    }
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
    Ok(Graph::from_edges(t, &pairs)?)
}

/// Reads an edge list from `path`, or from stdin for `-`.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse_edge_list(&text)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("# {VERTICES_DIRECTIVE} {}\n", g.n_vertices());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u, e.v);
    }
    s
}

/// DOT source for an undirected graph, with optional per-vertex labels.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n_vertices() {
        match labels {
            Some(l) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", l[v].replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for e in g.edges() {
        let _ = writeln!(s, "  {} -- {};", e.u, e.v);
    }
    s.push_str("}\n");
    s
}

pub fn config_labels(p: &PowerGraph) -> Vec<String> {
    p.configs().iter().map(ToString::to_string).collect()
}

fn kind_name(k: PowerKind) -> &'static str {
    match k {
        PowerKind::Reduced => "reduced",
        PowerKind::Token => "token",
    }
}

/// Index-to-configuration table written next to a power graph's edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerTable {
    pub kind: String,
    pub n: usize,
    pub vertices: Vec<Vec<usize>>,
}

impl PowerTable {
    pub fn new(p: &PowerGraph) -> Self {
        PowerTable {
            kind: kind_name(p.kind()).into(),
            n: p.n(),
            vertices: p.configs().iter().map(|c| c.tokens().to_vec()).collect(),
        }
    }
}

/// A power graph with its table and edges in one document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerJson {
    #[serde(flatten)]
    pub table: PowerTable,
    pub edges: Vec<[usize; 2]>,
}

impl PowerJson {
    pub fn new(p: &PowerGraph) -> Self {
        PowerJson {
            table: PowerTable::new(p),
            edges: p.graph().edges().iter().map(|e| [e.u, e.v]).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub vertices: usize,
    pub edges: usize,
}

impl Stats {
    pub fn of(g: &Graph) -> Self {
        Stats {
            vertices: g.n_vertices(),
            edges: g.n_edges(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<usize>>,
}

impl From<&TwoComplex> for ComplexJson {
    fn from(x: &TwoComplex) -> Self {
        ComplexJson {
            vertices: x.n_vertices(),
            edges: x.edges().iter().map(|e| [e.u, e.v]).collect(),
            faces: x.faces().to_vec(),
        }
    }
}

impl TryFrom<ComplexJson> for TwoComplex {
    type Error = CliError;

    fn try_from(j: ComplexJson) -> Result<Self> {
        let edges = j
            .edges
            .iter()
            .map(|&[u, v]| {
                if u == v {
                    Err(CliError::Usage(format!("complex edge {u}-{v} is a loop")))
                } else {
                    Ok(EdgeId::new(u, v))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TwoComplex::new(j.vertices, edges, j.faces)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl From<&AbelianGroupDesc> for GroupJson {
    fn from(a: &AbelianGroupDesc) -> Self {
        GroupJson {
            rank: a.rank,
            torsion: a.torsion.clone(),
        }
    }
}

impl From<GroupJson> for AbelianGroupDesc {
    fn from(j: GroupJson) -> Self {
        AbelianGroupDesc {
            rank: j.rank,
            torsion: j.torsion,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

impl From<&Presentation> for PresentationJson {
    fn from(p: &Presentation) -> Self {
        PresentationJson {
            generators: p.n_generators,
            relators: p.relators.clone(),
        }
    }
}

impl TryFrom<PresentationJson> for Presentation {
    type Error = CliError;

    fn try_from(j: PresentationJson) -> Result<Self> {
        Ok(Presentation::new(j.generators, j.relators)?)
    }
}

/// `rows cols nonzeros` on the first line, then one `row col value` line
/// per nonzero entry, 0-based, row-major.
pub fn write_triplets(m: &SparseMatrix) -> String {
    let entries: Vec<(usize, usize, i64)> = m.triplets().collect();
    let mut s = format!("{} {} {}\n", m.n_rows(), m.n_cols(), entries.len());
    for (r, c, v) in entries {
        let _ = writeln!(s, "{r} {c} {v}");
    }
    s
}

pub fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tokenpower_core::graph::Family;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::generate(Family::WedgeCycles { k: 2, m: 4 }).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        let single = Graph::generate(Family::Path(0)).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&single)).unwrap(), single);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(parse_edge_list("0 0\n"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1\n1 0\n"), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_edge_list("0 -1\n"), Err(CliError::Parse { .. })));
        assert!(parse_edge_list("# just a comment\n\n0 1 # trailing\n").is_ok());
        assert!(matches!(parse_edge_list("0 1\n# vertices 1\n"), Err(CliError::Parse { line: 2, .. })));
        assert_eq!(parse_edge_list("# vertices 4\n0 1\n").unwrap().n_vertices(), 4);
    }

    #[test]
    fn triplet_format() {
        let mut m = SparseMatrix::new(3);
        m.push_row([(0, 1), (2, -1)]);
        assert_eq!(write_triplets(&m), "1 3 2\n0 0 1\n0 2 -1\n");
    }

    #[test]
    fn complex_json_round_trip() {
        let x = tokenpower_core::complexes::build_x(&Graph::generate(Family::Complete(4)).unwrap());
        let j = ComplexJson::from(&x);
        let back = TwoComplex::try_from(j.clone()).unwrap();
        assert_eq!(back, x);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with("{\"vertices\":4,\"edges\":[[0,1]"));
    }
}
