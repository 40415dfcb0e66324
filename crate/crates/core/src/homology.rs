//! First homology groups: cellular `H_1` of a 2-complex, the cubical `H_1`
//! of a graph computed from graph maps of squares, and the check that
//! embedded cycles plus Cartesian squares span the cycle lattice of a
//! reduced power.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::complexes::TwoComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, IntMatrix, SmithForm, SparseMatrix};
use crate::powers::{self, Chain, PowerGraph, PowerKind, TokenConfig};

/// A finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with
/// `1 < d_1 | d_2 | ... | d_k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroupDesc {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroupDesc {
    pub fn free(rank: usize) -> Self {
        AbelianGroupDesc {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The cokernel of a map whose Smith form is `snf`, inside a free
    /// group of rank `ambient` (which must be at least `snf.rank`).
    pub fn from_smith(ambient: usize, snf: &SmithForm) -> Result<Self> {
        let torsion = snf
            .torsion()
            .map(|d| d.to_u64().ok_or(Error::Overflow("torsion coefficient")))
            .collect::<Result<Vec<_>>>()?;
        Ok(AbelianGroupDesc {
            rank: ambient - snf.rank,
            torsion,
        })
    }

    /// `self ⊕ other`, renormalized into invariant-factor form.
    pub fn direct_sum(&self, other: &AbelianGroupDesc) -> Result<AbelianGroupDesc> {
        let cyclic: Vec<u64> = self.torsion.iter().chain(&other.torsion).copied().collect();
        let k = cyclic.len();
        let mut m = IntMatrix::zeros(k, k);
        for (i, &d) in cyclic.iter().enumerate() {
            let d = i64::try_from(d).map_err(|_| Error::Overflow("torsion coefficient"))?;
            m.set(i, i, d);
        }
        let mut sum = AbelianGroupDesc::from_smith(k, &linalg::smith_normal_form(&m))?;
        sum.rank = self.rank + other.rank;
        Ok(sum)
    }
}

impl fmt::Display for AbelianGroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(String::from("Z")),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// `H_1` of a connected 2-complex: the cycle rank of its 1-skeleton minus
/// the rank of the face boundaries, plus their nontrivial invariant factors.
pub fn h1_cellular(x: &TwoComplex) -> Result<AbelianGroupDesc> {
    if x.n_vertices() == 0 || !x.skeleton().is_connected() {
        return Err(Error::Disconnected);
    }
    let cycle_rank = x.edges().len() + 1 - x.n_vertices();
    let snf = linalg::sparse_smith_form(&x.face_boundaries());
    AbelianGroupDesc::from_smith(cycle_rank, &snf)
}

/// Sign convention for the cubical boundary `Σ_k s_k (D_k^- f - D_k^+ f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicalSign {
    /// `s_k = (-1)^k`, the convention under which `∂∂ = 0`.
    Alternating,
    /// `s_k = (-1)^dim` for every face direction.
    Constant,
}

/// Default cap on the number of nondegenerate square maps.
pub const DEFAULT_CUBE_CAP: usize = 5_000_000;

/// Bases of the normalized cubical chain groups in degrees 0 to 2.
///
/// Degree 1 is spanned by arcs `(u, v)` with `u ~ v`, degree 2 by corner
/// quadruples `(f00, f10, f01, f11)` of graph maps from the square that are
/// degenerate in neither direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicalChainBasis {
    pub n_vertices: usize,
    pub arcs: Vec<(usize, usize)>,
    pub squares: Vec<[usize; 4]>,
}

impl CubicalChainBasis {
    pub fn new(g: &Graph, cap: usize) -> Result<Self> {
        let t = g.n_vertices();
        let mut arcs = Vec::new();
        for u in 0..t {
            for &v in g.neighbors(u) {
                arcs.push((u, v));
            }
        }
        // Closed neighborhoods in sorted order.
        let closed: Vec<Vec<usize>> = (0..t)
            .map(|v| {
                let mut n = g.neighbors(v).to_vec();
                n.push(v);
                n.sort_unstable();
                n
            })
            .collect();
        let mut squares = Vec::new();
        for f00 in 0..t {
            for &f10 in &closed[f00] {
                for &f01 in &closed[f00] {
                    for &f11 in &closed[f10] {
                        if !g.reflexive_adjacent(f01, f11) {
                            continue;
                        }
                        let flat_1 = f00 == f10 && f01 == f11;
                        let flat_2 = f00 == f01 && f10 == f11;
                        if !flat_1 && !flat_2 {
                            squares.push([f00, f10, f01, f11]);
                            if squares.len() > cap {
                                return Err(Error::ResourceCap {
                                    what: "cubical 2-chains",
                                    size: squares.len() as u128,
                                    cap,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(CubicalChainBasis {
            n_vertices: t,
            arcs,
            squares,
        })
    }

    fn arc_index(&self) -> BTreeMap<(usize, usize), usize> {
        self.arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect()
    }

    /// `∂_1` transposed: the row of arc `(a, b)` is `b - a`.
    pub fn boundary_1(&self) -> SparseMatrix {
        let mut m = SparseMatrix::new(self.n_vertices);
        for &(a, b) in &self.arcs {
            m.push_row([(a, -1), (b, 1)]);
        }
        m
    }

    /// `∂_2` transposed. Degenerate (constant) edges of a square vanish in
    /// the normalized complex and are dropped.
    pub fn boundary_2(&self, sign: CubicalSign) -> SparseMatrix {
        let index = self.arc_index();
        let s1 = match sign {
            CubicalSign::Alternating => -1,
            CubicalSign::Constant => 1,
        };
        let mut m = SparseMatrix::new(self.arcs.len());
        for &[f00, f10, f01, f11] in &self.squares {
            let terms = [
                ((f00, f01), s1),
                ((f10, f11), -s1),
                ((f00, f10), 1),
                ((f01, f11), -1),
            ];
            m.push_row(
                terms
                    .into_iter()
                    .filter(|((a, b), _)| a != b)
                    .map(|(arc, c)| (index[&arc], c)),
            );
        }
        m
    }
}

/// Cubical `H_1` of a connected graph with the alternating sign.
pub fn cubical_h1(g: &Graph) -> Result<AbelianGroupDesc> {
    cubical_h1_with(g, CubicalSign::Alternating, DEFAULT_CUBE_CAP)
}

pub fn cubical_h1_with(g: &Graph, sign: CubicalSign, cap: usize) -> Result<AbelianGroupDesc> {
    if g.n_vertices() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let basis = CubicalChainBasis::new(g, cap)?;
    let rank_1 = g.n_vertices() - 1;
    let snf = linalg::sparse_smith_form(&basis.boundary_2(sign));
    AbelianGroupDesc::from_smith(basis.arcs.len() - rank_1, &snf)
}

/// Whether `∂_1 ∘ ∂_2 = 0` on the cubical chains of `g` under `sign`.
pub fn cubical_boundary_squares_to_zero(g: &Graph, sign: CubicalSign) -> Result<bool> {
    let basis = CubicalChainBasis::new(g, DEFAULT_CUBE_CAP)?;
    Ok(basis.boundary_2(sign).mul(&basis.boundary_1()).is_zero())
}

/// Outcome of checking that the cycles `C_e·x` (one per non-tree edge of a
/// BFS spanning tree of `G`) together with all Cartesian-square boundaries
/// generate the integral cycle lattice of `SP^n(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HombasisReport {
    pub power_vertices: usize,
    pub power_edges: usize,
    pub cycle_rank: usize,
    pub fundamental_cycles: usize,
    pub squares: usize,
    pub span_rank: usize,
    pub unimodular: bool,
    pub phi_consistent: bool,
}

impl HombasisReport {
    pub fn passed(&self) -> bool {
        self.span_rank == self.cycle_rank && self.unimodular && self.phi_consistent
    }
}

/// Runs the cycle-basis check on `SP^n(G)` with background monomial `x`.
pub fn verify_hombasis(g: &Graph, n: usize, x: &TokenConfig) -> Result<HombasisReport> {
    verify_hombasis_in(&powers::reduced_power(g, n)?, x)
}

/// As [`verify_hombasis`], on an already built reduced power.
pub fn verify_hombasis_in(p: &PowerGraph, x: &TokenConfig) -> Result<HombasisReport> {
    let g = p.base();
    if p.kind() != PowerKind::Reduced || p.n() < 2 {
        return Err(Error::Parameter(String::from("needs a reduced power with n >= 2")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let embed = powers::embed_gx(p, x)?;
    let edge_index = powers::power_edge_index(p);
    let mut rows: Vec<Chain> = Vec::new();
    let mut expected_phi: Vec<Chain> = Vec::new();

    let parents = g.bfs_parents(0);
    let root_path = |v: usize| {
        let mut path = alloc::vec![v];
        let mut cur = v;
        while cur != 0 {
            cur = parents[cur];
            path.push(cur);
        }
        path
    };
    for e in g.edges() {
        if parents[e.u] == e.v || parents[e.v] == e.u {
            continue;
        }
        // root -> u -> v -> root
        let mut walk = root_path(e.u);
        walk.reverse();
        walk.extend(root_path(e.v));
        let lifted: Vec<usize> = walk.iter().map(|&v| embed[v]).collect();
        rows.push(powers::walk_chain(&lifted));
        expected_phi.push(powers::walk_chain(&walk));
    }
    let fundamental_cycles = rows.len();
    let squares = powers::cartesian_squares(p)?;
    for s in &squares {
        let c = s.corners;
        rows.push(powers::walk_chain(&[c[0], c[1], c[2], c[3], c[0]]));
        expected_phi.push(Chain::new());
    }

    let phi_consistent = rows
        .iter()
        .zip(&expected_phi)
        .map(|(r, want)| powers::project_chain_phi(p, r).map(|got| &got == want))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);

    let mut m = SparseMatrix::new(edge_index.len());
    for r in &rows {
        m.push_row(r.iter().map(|(e, &c)| {
            (edge_index.index_of(e.u, e.v).expect("chain lies on power edges"), c)
        }));
    }
    let snf = linalg::sparse_smith_form(&m);
    let power_edges = edge_index.len();
    let power_vertices = p.n_vertices();
    Ok(HombasisReport {
        power_vertices,
        power_edges,
        cycle_rank: power_edges + 1 - power_vertices,
        fundamental_cycles,
        squares: squares.len(),
        span_rank: snf.rank,
        unimodular: snf.factors.iter().all(BigInt::is_one),
        phi_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::build_x;
    use crate::graph::Family;

    fn gen(f: Family) -> Graph {
        Graph::generate(f).unwrap()
    }

    #[test]
    fn cellular_examples() {
        let klein = h1_cellular(&build_x(&gen(Family::KleinGrid(5)))).unwrap();
        assert_eq!(klein, AbelianGroupDesc { rank: 1, torsion: alloc::vec![2] });
        assert_eq!(h1_cellular(&build_x(&gen(Family::Cycle(5)))).unwrap(), AbelianGroupDesc::free(1));
        assert!(h1_cellular(&build_x(&gen(Family::Cycle(4)))).unwrap().is_trivial());
    }

    #[test]
    fn cellular_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(h1_cellular(&build_x(&g)), Err(Error::Disconnected));
    }

    #[test]
    fn cubical_examples() {
        assert!(cubical_h1(&gen(Family::Complete(2))).unwrap().is_trivial());
        assert_eq!(cubical_h1(&gen(Family::Cycle(5))).unwrap(), AbelianGroupDesc::free(1));
        assert!(cubical_h1(&gen(Family::Cycle(4))).unwrap().is_trivial());
    }

    #[test]
    fn constant_sign_breaks_boundary() {
        let g = gen(Family::Cycle(4));
        assert!(cubical_boundary_squares_to_zero(&g, CubicalSign::Alternating).unwrap());
        assert!(!cubical_boundary_squares_to_zero(&g, CubicalSign::Constant).unwrap());
    }

    #[test]
    fn squares_are_nondegenerate() {
        let b = CubicalChainBasis::new(&gen(Family::Path(1)), DEFAULT_CUBE_CAP).unwrap();
        assert_eq!(b.arcs, alloc::vec![(0, 1), (1, 0)]);
        for &[a, b_, c, d] in &b.squares {
            assert!(!(a == b_ && c == d) && !(a == c && b_ == d));
        }
    }

    #[test]
    fn hombasis_on_pentagon() {
        let r = verify_hombasis(&gen(Family::Cycle(5)), 2, &TokenConfig::new(alloc::vec![0])).unwrap();
        assert_eq!((r.cycle_rank, r.fundamental_cycles, r.squares), (11, 1, 10));
        assert!(r.passed());
        let r = verify_hombasis(&gen(Family::Complete(2)), 2, &TokenConfig::new(alloc::vec![0])).unwrap();
        assert_eq!(r.cycle_rank, 0);
        assert!(r.passed());
    }

    #[test]
    fn display_and_sums() {
        let a = AbelianGroupDesc { rank: 1, torsion: alloc::vec![2] };
        let b = AbelianGroupDesc { rank: 0, torsion: alloc::vec![3] };
        assert_eq!(a.direct_sum(&b).unwrap(), AbelianGroupDesc { rank: 1, torsion: alloc::vec![6] });
        assert_eq!(alloc::format!("{a}"), "Z ⊕ Z_2");
        assert_eq!(alloc::format!("{}", AbelianGroupDesc::default()), "0");
    }
}
