//! Two-dimensional cell complexes built from graphs: the complex `X(G)`
//! with a 2-cell on every triangle and chordless square, and the cells of
//! dimension at most two of the discrete configuration complex `UD^n(G)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::comb::{self, BinomialTable};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeIndex, Graph};
use crate::linalg::SparseMatrix;
use crate::powers::{self, PowerKind, TokenConfig};
use crate::DEFAULT_MAX_VERTICES;

/// A complex with vertices `0..n_vertices`, sorted edges, and 2-cells given
/// by their boundary walks (3 or 4 vertices, closing edge implied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoComplex {
    n_vertices: usize,
    edges: EdgeIndex,
    faces: Vec<Vec<usize>>,
}

/// Rotates and reflects a cycle so that it starts at its least vertex and
/// steps toward the lesser of that vertex's two neighbors on the cycle.
pub fn canonical_cycle(walk: &[usize]) -> Vec<usize> {
    let k = walk.len();
    if k == 0 {
        return Vec::new();
    }
    let start = (0..k).min_by_key(|&i| walk[i]).unwrap();
    let next = walk[(start + 1) % k];
    let prev = walk[(start + k - 1) % k];
    if next <= prev {
        (0..k).map(|i| walk[(start + i) % k]).collect()
    } else {
        (0..k).map(|i| walk[(start + k - i) % k]).collect()
    }
}

impl TwoComplex {
    /// Validates that every face walk uses edges of the complex, and stores
    /// the faces in canonical orientation, sorted and deduplicated.
    pub fn new(n_vertices: usize, edges: Vec<EdgeId>, faces: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        if let Some(e) = edges.iter().find(|e| e.v >= n_vertices) {
            return Err(Error::VertexOutOfRange {
                vertex: e.v,
                n: n_vertices,
            });
        }
        let edges = EdgeIndex::from_sorted(edges);
        let mut canon = BTreeSet::new();
        for f in &faces {
            if !(3..=4).contains(&f.len()) {
                return Err(Error::BadWalk(format!("face {f:?} must have 3 or 4 vertices")));
            }
            for i in 0..f.len() {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                if edges.index_of(a, b).is_none() {
                    return Err(Error::UnknownEdge(a.min(b), a.max(b)));
                }
            }
            canon.insert(canonical_cycle(f));
        }
        Ok(TwoComplex {
            n_vertices,
            edges,
            faces: canon.into_iter().collect(),
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        self.edges.edges()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn edge_index(&self) -> &EdgeIndex {
        &self.edges
    }

    /// The 1-skeleton as a graph.
    pub fn skeleton(&self) -> Graph {
        let pairs: Vec<(usize, usize)> = self.edges().iter().map(|e| (e.u, e.v)).collect();
        Graph::from_edges(self.n_vertices, &pairs).expect("edges were validated")
    }

    /// `∂_1` transposed: one row per edge `u < v` holding `v - u`.
    pub fn edge_boundaries(&self) -> SparseMatrix {
        let mut m = SparseMatrix::new(self.n_vertices);
        for e in self.edges() {
            m.push_row([(e.u, -1), (e.v, 1)]);
        }
        m
    }

    /// `∂_2` transposed: one row per face holding its oriented edge chain.
    pub fn face_boundaries(&self) -> SparseMatrix {
        let mut m = SparseMatrix::new(self.edges.len());
        for f in &self.faces {
            let k = f.len();
            m.push_row((0..k).map(|i| {
                let (a, b) = (f[i], f[(i + 1) % k]);
                let col = self.edges.index_of(a, b).expect("validated face");
                (col, if a < b { 1 } else { -1 })
            }));
        }
        m
    }

    /// Whether `∂_1 ∘ ∂_2` vanishes.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.face_boundaries().mul(&self.edge_boundaries()).is_zero()
    }
}

/// `X(G)`: the graph with a 2-cell glued along each triangle and each
/// chordless 4-cycle.
pub fn build_x(g: &Graph) -> TwoComplex {
    let faces = g
        .triangles()
        .into_iter()
        .map(|t| t.to_vec())
        .chain(g.chordless_4cycles().into_iter().map(|q| q.to_vec()))
        .collect();
    TwoComplex::new(g.n_vertices(), g.edges(), faces).expect("cycles of G lie in G")
}

/// A cell of `UD^n(G)`: `n` pairwise disjoint closed cells of `G`, each a
/// vertex or an edge. Its dimension is the number of edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConfigCell {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<usize>,
}

impl ConfigCell {
    pub fn dimension(&self) -> usize {
        self.edges.len()
    }

    /// The `2^dim` corner configurations, one endpoint chosen per edge. The
    /// bit `k` of the corner index selects `v` over `u` on edge `k`.
    pub fn corners(&self) -> Vec<TokenConfig> {
        (0..1usize << self.edges.len())
            .map(|mask| {
                let mut tokens = self.vertices.clone();
                for (k, e) in self.edges.iter().enumerate() {
                    tokens.push(if mask >> k & 1 == 0 { e.u } else { e.v });
                }
                TokenConfig::new(tokens)
            })
            .collect()
    }
}

/// Cells of `UD^n(G)` in dimensions 0, 1 and 2, with the induced 2-complex
/// whose vertex `i` is the `i`-th `n`-subset in lexicographic order.
#[derive(Debug, Clone)]
pub struct UdComplex {
    pub n: usize,
    pub cells: [Vec<ConfigCell>; 3],
    pub complex: TwoComplex,
}

/// Cells of `UD^n(G)` up to dimension two.
pub fn build_ud(g: &Graph, n: usize) -> Result<UdComplex> {
    build_ud_capped(g, n, DEFAULT_MAX_VERTICES)
}

pub fn build_ud_capped(g: &Graph, n: usize, cap: usize) -> Result<UdComplex> {
    let t = g.n_vertices();
    if n > t {
        return Err(Error::Parameter(format!("UD^{n} needs at least {n} vertices, G has {t}")));
    }
    let count = comb::binomial(t as u64, n as u64).unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::ResourceCap {
            what: "UD^n 0-cells",
            size: count,
            cap,
        });
    }
    let edges = g.edges();
    let table = BinomialTable::new(t, n);
    let rank = |x: &TokenConfig| comb::rank_combination(&table, t, x.tokens()) as usize;

    let mut cells: [Vec<ConfigCell>; 3] = Default::default();
    for (dim, slot) in cells.iter_mut().enumerate() {
        if dim > n {
            break;
        }
        for chosen in comb::combinations(edges.len(), dim) {
            let es: Vec<EdgeId> = chosen.iter().map(|&i| edges[i]).collect();
            let mut used = vec![false; t];
            let mut disjoint = true;
            for e in &es {
                for w in [e.u, e.v] {
                    disjoint &= !core::mem::replace(&mut used[w], true);
                }
            }
            if !disjoint {
                continue;
            }
            let free: Vec<usize> = (0..t).filter(|&w| !used[w]).collect();
            for pick in comb::combinations(free.len(), n - dim) {
                slot.push(ConfigCell {
                    edges: es.clone(),
                    vertices: pick.iter().map(|&i| free[i]).collect(),
                });
            }
        }
        slot.sort_unstable();
    }

    let one_cells: Vec<EdgeId> = cells[1]
        .iter()
        .map(|c| {
            let ends = c.corners();
            EdgeId::new(rank(&ends[0]), rank(&ends[1]))
        })
        .collect();
    let faces: Vec<Vec<usize>> = cells[2]
        .iter()
        .map(|c| {
            // corner bits: 00, 10, 11, 01 walk around the square
            let k = c.corners();
            [0, 1, 3, 2].iter().map(|&i| rank(&k[i])).collect()
        })
        .collect();
    let complex = TwoComplex::new(count as usize, one_cells, faces)?;
    Ok(UdComplex { n, cells, complex })
}

/// Result of comparing `T_n(G)` and `X(T_n(G))` with the low skeleta of
/// `UD^n(G)`. `sk2` is `None` when `G` has a 3- or 4-cycle, in which case
/// only the 1-skeleton statement applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonReport {
    pub sk1: bool,
    pub sk2: Option<bool>,
    pub details: Vec<String>,
}

impl SkeletonReport {
    pub fn passed(&self) -> bool {
        self.sk1 && self.sk2.unwrap_or(true)
    }
}

/// Checks the bijection between `n`-subsets and squarefree configurations
/// on edges, and (when `G` has no 3- or 4-cycles) on 2-cells, where the
/// 2-cells must also coincide with the token Cartesian squares.
pub fn verify_skeleton_iso(g: &Graph, n: usize) -> Result<SkeletonReport> {
    let tok = powers::token_graph(g, n)?;
    let ud = build_ud(g, n)?;
    let mut details = Vec::new();

    // The bijection sends the UD 0-cell with table index i to the token
    // configuration with the same tokens.
    let mut map = vec![usize::MAX; ud.complex.n_vertices()];
    for (i, cell) in ud.cells[0].iter().enumerate() {
        let cfg = TokenConfig::new(cell.vertices.clone());
        map[i] = tok.index_of(&cfg).ok_or(Error::CheckFailed(format!("{cfg} is not a token configuration")))?;
    }
    let ud_edges: BTreeSet<EdgeId> = ud
        .complex
        .edges()
        .iter()
        .map(|e| EdgeId::new(map[e.u], map[e.v]))
        .collect();
    let tok_edges: BTreeSet<EdgeId> = tok.graph().edges().into_iter().collect();
    let bijective = ud.cells[0].len() == tok.n_vertices()
        && map.iter().copied().collect::<BTreeSet<_>>().len() == map.len();
    let sk1 = bijective && ud_edges == tok_edges && ud.complex.edges().len() == ud.cells[1].len();
    details.push(format!(
        "sk1: {} vertices, {} edges in T_n; {} 0-cells, {} 1-cells in UD^n",
        tok.n_vertices(),
        tok_edges.len(),
        ud.cells[0].len(),
        ud.cells[1].len()
    ));

    let sk2 = if g.has_3_or_4_cycle() {
        details.push(String::from("sk2: skipped, G has a 3- or 4-cycle"));
        None
    } else {
        let x_faces: BTreeSet<Vec<usize>> = build_x(tok.graph()).faces().iter().cloned().collect();
        let ud_faces: BTreeSet<Vec<usize>> = ud
            .complex
            .faces()
            .iter()
            .map(|f| canonical_cycle(&f.iter().map(|&v| map[v]).collect::<Vec<_>>()))
            .collect();
        let squares: BTreeSet<Vec<usize>> = if n >= 2 {
            debug_assert_eq!(tok.kind(), PowerKind::Token);
            powers::cartesian_squares(&tok)?
                .into_iter()
                .map(|s| canonical_cycle(&s.corners))
                .collect()
        } else {
            BTreeSet::new()
        };
        details.push(format!(
            "sk2: {} faces of X(T_n), {} 2-cells of UD^n, {} token Cartesian squares",
            x_faces.len(),
            ud.cells[2].len(),
            squares.len()
        ));
        Some(x_faces == ud_faces && ud_faces == squares && ud_faces.len() == ud.cells[2].len())
    };
    Ok(SkeletonReport { sk1, sk2, details })
}
