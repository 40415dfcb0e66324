//! Finite simple undirected graphs on dense vertex ids `0..t`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An edge written with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    pub u: usize,
    pub v: usize,
}

impl EdgeId {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            EdgeId { u: a, v: b }
        } else {
            EdgeId { u: b, v: a }
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &EdgeId) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// `t` isolated vertices.
    pub fn empty(t: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); t],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// ids outside `0..t`.
    pub fn from_edges(t: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); t];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= t {
                    return Err(Error::VertexOutOfRange { vertex: x, n: t });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let e = EdgeId::new(v, w[0]);
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from neighbor lists that already satisfy the
    /// invariants up to ordering: symmetric, loop-free, duplicate-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| l.iter().all(|&w| w != v && adj[w].binary_search(&v).is_ok())));
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.adj.len() {
            return Err(Error::Parameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.adj.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    /// `a` and `b` are equal or adjacent.
    pub fn reflexive_adjacent(&self, a: usize, b: usize) -> bool {
        a == b || self.has_edge(a, b)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::with_capacity(self.n_edges());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push(EdgeId { u, v });
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Connected-component label of each vertex, numbered in order of the
    /// smallest vertex they contain.
    pub fn components(&self) -> Vec<usize> {
        let t = self.n_vertices();
        let mut comp = vec![usize::MAX; t];
        let mut next = 0;
        for s in 0..t {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Connected and non-empty.
    pub fn is_connected(&self) -> bool {
        self.n_vertices() > 0 && self.components().iter().all(|&c| c == 0)
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        self.bfs(src).0
    }

    /// Breadth-first parents from `src`, neighbors visited in increasing
    /// order. The root is its own parent; unreachable vertices get
    /// `usize::MAX`.
    pub fn bfs_parents(&self, src: usize) -> Vec<usize> {
        self.bfs(src).1
    }

    fn bfs(&self, src: usize) -> (Vec<usize>, Vec<usize>) {
        let t = self.n_vertices();
        let mut dist = vec![usize::MAX; t];
        let mut parent = vec![usize::MAX; t];
        dist[src] = 0;
        parent[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// A shortest path from `a` to `b`, both endpoints included.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let parent = self.bfs_parents(b);
        if parent[a] == usize::MAX {
            return None;
        }
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            cur = parent[cur];
            path.push(cur);
        }
        Some(path)
    }

    /// Vertices of degree other than 2.
    pub fn essential_vertices(&self) -> Vec<usize> {
        (0..self.n_vertices()).filter(|&v| self.degree(v) != 2).collect()
    }

    /// Each 3-cycle once, as a sorted triple.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n_vertices() {
            for &b in self.adj[a].iter().filter(|&&b| b > a) {
                for &c in self.adj[b].iter().filter(|&&c| c > b) {
                    if self.has_edge(a, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Each chordless 4-cycle once, as `[a, b, c, d]` read around the cycle
    /// with `a` the smallest vertex and `b < d`.
    pub fn chordless_4cycles(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 0..self.n_vertices() {
            let nbrs = &self.adj[a];
            for (i, &b) in nbrs.iter().enumerate().filter(|&(_, &b)| b > a) {
                for &d in nbrs[i + 1..].iter() {
                    if self.has_edge(b, d) {
                        continue;
                    }
                    for &c in self.adj[b].iter().filter(|&&c| c > a && c != d) {
                        if self.has_edge(c, d) && !self.has_edge(a, c) {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Some 3-cycle or 4-cycle (chorded or not) exists.
    pub fn has_3_or_4_cycle(&self) -> bool {
        !self.simple_cycles(4).is_empty()
    }

    /// Every simple cycle of length at most `max_len`, each listed once,
    /// starting at its smallest vertex and continuing toward the smaller of
    /// that vertex's two cycle neighbors.
    pub fn simple_cycles(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if max_len < 3 {
            return out;
        }
        let t = self.n_vertices();
        let mut on_path = vec![false; t];
        for s in 0..t {
            let mut path = vec![s];
            on_path[s] = true;
            self.extend_cycles(s, max_len, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
        }
        out
    }

    fn extend_cycles(
        &self,
        s: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if w == s && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > s && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                self.extend_cycles(s, max_len, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    /// Sufficient-subdivision test with the default cycle-length bound
    /// `n + 1`.
    pub fn sufficiently_subdivided(&self, n: usize) -> Result<SubdivisionCheck> {
        self.sufficiently_subdivided_with_bound(n, n + 1)
    }

    /// Tests whether the graph is sufficiently subdivided for `n` tokens:
    ///
    /// 1. distinct essential vertices are at distance at least `n - 1`;
    /// 2. every closed walk based at an essential vertex that is not
    ///    nullhomotopic in the underlying 1-complex has length at least
    ///    `n + 1`.
    ///
    /// Condition 2 is evaluated as `min len(C) + 2 dist(v, C)` over simple
    /// cycles `C`. A reduced closed walk at `v` that is not nullhomotopic
    /// contains a simple cycle and has to reach it and come back, so it is
    /// never shorter than that quantity; walking a shortest path to `C`,
    /// around `C`, and back attains it. Only cycles of length at most
    /// `cycle_bound` are enumerated, and a bound of `n` already suffices.
    pub fn sufficiently_subdivided_with_bound(
        &self,
        n: usize,
        cycle_bound: usize,
    ) -> Result<SubdivisionCheck> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let essential = self.essential_vertices();
        let dists: BTreeMap<usize, Vec<usize>> = essential
            .iter()
            .map(|&v| (v, self.distances_from(v)))
            .collect();
        let need_path = n.saturating_sub(1);
        for (i, &u) in essential.iter().enumerate() {
            for &v in &essential[i + 1..] {
                let d = dists[&u][v];
                if d < need_path {
                    return Ok(SubdivisionCheck::Fails(Violation::EssentialPair {
                        u,
                        v,
                        distance: d,
                    }));
                }
            }
        }
        let need_cycle = n + 1;
        let cycles = self.simple_cycles(cycle_bound.min(need_cycle.saturating_sub(1)));
        let mut worst: Option<Violation> = None;
        for &v in &essential {
            let dv = &dists[&v];
            for c in &cycles {
                let reach = c.iter().map(|&w| dv[w]).min().unwrap();
                let len = c.len() + 2 * reach;
                if len < need_cycle {
                    let better = match &worst {
                        Some(Violation::Cycle { length, .. }) => len < *length,
                        _ => true,
                    };
                    if better {
                        worst = Some(Violation::Cycle {
                            base: v,
                            cycle: c.clone(),
                            length: len,
                        });
                    }
                }
            }
        }
        Ok(match worst {
            Some(w) => SubdivisionCheck::Fails(w),
            None => SubdivisionCheck::Holds,
        })
    }

    /// Smallest uniform subdivision that is sufficiently subdivided for `n`.
    pub fn subdivide_for(&self, n: usize) -> Result<Graph> {
        let mut k = 0;
        loop {
            let g = if k == 0 {
                self.clone()
            } else {
                self.subdivide_uniform(k)
            };
            if g.sufficiently_subdivided(n)?.holds() {
                return Ok(g);
            }
            k += 1;
        }
    }

    /// Replaces each edge `e` by a path with `counts[e]` interior vertices
    /// (missing entries mean zero). Original vertices keep their ids; new
    /// vertices are numbered by edge, then by position from `e.u` to `e.v`.
    pub fn subdivide(&self, counts: &BTreeMap<EdgeId, usize>) -> Result<Graph> {
        for e in counts.keys() {
            if !self.has_edge(e.u, e.v) {
                return Err(Error::UnknownEdge(e.u, e.v));
            }
        }
        let mut next = self.n_vertices();
        let mut edges = Vec::new();
        for e in self.edges() {
            let k = counts.get(&e).copied().unwrap_or(0);
            let mut prev = e.u;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, e.v));
        }
        Graph::from_edges(next, &edges)
    }

    pub fn subdivide_uniform(&self, k: usize) -> Graph {
        let counts = self.edges().into_iter().map(|e| (e, k)).collect();
        self.subdivide(&counts).expect("every listed edge exists")
    }

    /// Cartesian (box) product; vertex `(g, h)` gets id `g * |H| + h`.
    pub fn box_product(&self, other: &Graph) -> Graph {
        let th = other.n_vertices();
        let mut adj = vec![Vec::new(); self.n_vertices() * th];
        for g in 0..self.n_vertices() {
            for h in 0..th {
                let list = &mut adj[g * th + h];
                for &g2 in &self.adj[g] {
                    list.push(g2 * th + h);
                }
                for &h2 in &other.adj[h] {
                    list.push(g * th + h2);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// `n`-fold box power; `G^0` is a single vertex. Tuple
    /// `(v_1, ..., v_n)` gets the mixed-radix id with `v_1` most
    /// significant.
    pub fn box_power(&self, n: usize) -> Graph {
        let mut acc = Graph::empty(1);
        for _ in 0..n {
            acc = acc.box_product(self);
        }
        acc
    }

    /// Generates one of the named graph families.
    pub fn generate(family: Family) -> Result<Graph> {
        match family {
            Family::Path(m) => {
                let edges: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
                Graph::from_edges(m + 1, &edges)
            }
            Family::Cycle(m) => {
                if m < 3 {
                    return Err(Error::Parameter(format!("cycle needs m >= 3, got {m}")));
                }
                let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
                Graph::from_edges(m, &edges)
            }
            Family::Star(m) => {
                if m < 1 {
                    return Err(Error::Parameter("star needs m >= 1".into()));
                }
                let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
                Graph::from_edges(m + 1, &edges)
            }
            Family::Complete(t) => {
                if t < 1 {
                    return Err(Error::Parameter("complete graph needs t >= 1".into()));
                }
                let mut edges = Vec::new();
                for a in 0..t {
                    for b in a + 1..t {
                        edges.push((a, b));
                    }
                }
                Graph::from_edges(t, &edges)
            }
            Family::WedgeCycles { k, m } => {
                if k < 1 || m < 3 {
                    return Err(Error::Parameter(format!(
                        "wedge of cycles needs k >= 1 and m >= 3, got k={k}, m={m}"
                    )));
                }
                // Hub is 0; cycle j runs 0, 1+j(m-1), ..., (j+1)(m-1), 0.
                let mut edges = Vec::new();
                for j in 0..k {
                    let first = 1 + j * (m - 1);
                    let mut prev = 0;
                    for v in first..first + m - 1 {
                        edges.push((prev, v));
                        prev = v;
                    }
                    edges.push((prev, 0));
                }
                Graph::from_edges(1 + k * (m - 1), &edges)
            }
            Family::KleinGrid(s) => klein_grid(s),
        }
    }
}

/// `s x s` square grid with the Klein bottle identifications: the left and
/// right sides are glued with matching orientation, the top and bottom with
/// reversed orientation, so `(x, s) ~ (s - x, 0)`. Vertex `(x, y)` with
/// `0 <= x, y < s` has id `y * s + x`. For `s = 2` the identifications
/// produce parallel edges, which collapse.
fn klein_grid(s: usize) -> Result<Graph> {
    if s < 2 {
        return Err(Error::Parameter(format!("klein grid needs s >= 2, got {s}")));
    }
    let id = |x: usize, y: usize| y * s + x;
    let mut adj = vec![Vec::new(); s * s];
    let mut link = |a: usize, b: usize| {
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    };
    for y in 0..s {
        for x in 0..s {
            link(id(x, y), id((x + 1) % s, y));
            let up = if y + 1 < s {
                id(x, y + 1)
            } else {
                id((s - x) % s, 0)
            };
            link(id(x, y), up);
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Named graph families with documented vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `I_m`: vertices `0..=m` in a line.
    Path(usize),
    /// `C_m`: vertices `0..m` around a cycle.
    Cycle(usize),
    /// `S_m`: center 0, leaves `1..=m`.
    Star(usize),
    /// `K_t`.
    Complete(usize),
    /// `k` cycles of length `m` sharing the hub vertex 0.
    WedgeCycles { k: usize, m: usize },
    /// 1-skeleton of the `s x s` Klein bottle grid.
    KleinGrid(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EssentialPair {
        u: usize,
        v: usize,
        distance: usize,
    },
    Cycle {
        base: usize,
        cycle: Vec<usize>,
        length: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubdivisionCheck {
    Holds,
    Fails(Violation),
}

impl SubdivisionCheck {
    pub fn holds(&self) -> bool {
        matches!(self, SubdivisionCheck::Holds)
    }
}

/// Sorted edge list with index lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIndex {
    edges: Vec<EdgeId>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> Self {
        EdgeIndex { edges: g.edges() }
    }

    pub fn from_sorted(edges: Vec<EdgeId>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        EdgeIndex { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        self.edges.binary_search(&EdgeId::new(a, b)).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(f: Family) -> Graph {
        Graph::generate(f).unwrap()
    }

    #[test]
    fn family_sizes() {
        let s5 = gen(Family::Star(5));
        assert_eq!((s5.n_vertices(), s5.n_edges()), (6, 5));
        assert_eq!(s5.degree_sequence(), vec![5, 1, 1, 1, 1, 1]);

        let p0 = gen(Family::Path(0));
        assert_eq!((p0.n_vertices(), p0.n_edges()), (1, 0));

        let k = gen(Family::KleinGrid(5));
        assert_eq!((k.n_vertices(), k.n_edges()), (25, 50));
        assert!(k.degree_sequence().iter().all(|&d| d == 4));

        let w = gen(Family::WedgeCycles { k: 3, m: 5 });
        assert_eq!((w.n_vertices(), w.n_edges()), (13, 15));
        assert_eq!(w.degree(0), 6);
        assert_eq!(w.degree_sequence()[1], 2);
    }

    #[test]
    fn family_parameter_errors() {
        assert!(Graph::generate(Family::Cycle(2)).is_err());
        assert!(Graph::generate(Family::Star(0)).is_err());
        assert!(Graph::generate(Family::WedgeCycles { k: 2, m: 2 }).is_err());
        assert!(Graph::generate(Family::WedgeCycles { k: 0, m: 5 }).is_err());
        assert!(Graph::generate(Family::KleinGrid(1)).is_err());
        assert!(Graph::generate(Family::Complete(0)).is_err());
    }

    #[test]
    fn loader_rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn box_products() {
        let i1 = gen(Family::Path(1));
        let q2 = i1.box_product(&i1);
        assert_eq!((q2.n_vertices(), q2.n_edges()), (4, 4));
        assert!(q2.degree_sequence().iter().all(|&d| d == 2));

        let c5 = gen(Family::Cycle(5));
        assert_eq!(Graph::empty(1).box_product(&c5), c5);

        let prism = gen(Family::Cycle(3)).box_product(&gen(Family::Path(1)));
        assert_eq!((prism.n_vertices(), prism.n_edges()), (6, 9));

        let q3 = i1.box_power(3);
        assert_eq!((q3.n_vertices(), q3.n_edges()), (8, 12));
    }

    #[test]
    fn subdivisions() {
        let k2 = gen(Family::Path(1));
        let mut counts = BTreeMap::new();
        counts.insert(EdgeId::new(0, 1), 1);
        let i2 = k2.subdivide(&counts).unwrap();
        assert_eq!(i2.edges(), vec![EdgeId::new(0, 2), EdgeId::new(1, 2)]);
        assert_eq!(i2.degree_sequence(), vec![2, 1, 1]);

        let c6 = gen(Family::Cycle(3)).subdivide_uniform(1);
        assert_eq!((c6.n_vertices(), c6.n_edges()), (6, 6));
        assert!(c6.is_connected() && c6.degree_sequence().iter().all(|&d| d == 2));

        let spider = gen(Family::Star(3)).subdivide_uniform(2);
        assert_eq!(spider.n_vertices(), 10);
        assert_eq!(spider.degree_sequence(), vec![3, 2, 2, 2, 2, 2, 2, 1, 1, 1]);
        for leaf in 1..=3 {
            assert_eq!(spider.distances_from(0)[leaf], 3);
        }

        let mut bad = BTreeMap::new();
        bad.insert(EdgeId::new(0, 2), 1);
        assert_eq!(k2.subdivide(&bad), Err(Error::UnknownEdge(0, 2)));
    }

    #[test]
    fn essential() {
        assert!(gen(Family::Cycle(5)).essential_vertices().is_empty());
        assert_eq!(gen(Family::Path(5)).essential_vertices(), vec![0, 5]);
        assert_eq!(
            gen(Family::WedgeCycles { k: 2, m: 5 }).essential_vertices(),
            vec![0]
        );
    }

    #[test]
    fn sufficient_subdivision_examples() {
        for g in [
            gen(Family::Complete(5)),
            gen(Family::Star(4)),
            gen(Family::KleinGrid(3)),
        ] {
            assert!(g.sufficiently_subdivided(2).unwrap().holds());
        }
        let s5 = gen(Family::Star(5));
        assert!(!s5.sufficiently_subdivided(3).unwrap().holds());

        let w = gen(Family::WedgeCycles { k: 3, m: 5 });
        assert!(w.sufficiently_subdivided(4).unwrap().holds());
        match w.sufficiently_subdivided(5).unwrap() {
            SubdivisionCheck::Fails(Violation::Cycle { base, length, .. }) => {
                assert_eq!((base, length), (0, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            disconnected.sufficiently_subdivided(2),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn subdivide_for_examples() {
        let w = gen(Family::WedgeCycles { k: 2, m: 5 });
        assert_eq!(w.subdivide_for(4).unwrap(), w);
        let k2 = gen(Family::Path(1));
        assert_eq!(k2.subdivide_for(2).unwrap(), k2);
        let c3 = gen(Family::Cycle(3));
        assert_eq!(c3.subdivide_for(3).unwrap(), c3);

        let s3 = gen(Family::Star(3));
        let s = s3.subdivide_for(4).unwrap();
        assert!(s.sufficiently_subdivided(4).unwrap().holds());
        // Legs of length 3 put the leaves at distance 6 >= 3, the minimum
        // being the center-to-leaf distance 3 with k = 2.
        assert_eq!(s.n_vertices(), 10);
    }

    #[test]
    fn short_cycles() {
        let k4 = gen(Family::Complete(4));
        assert_eq!(k4.triangles().len(), 4);
        assert!(k4.chordless_4cycles().is_empty());

        let c4 = gen(Family::Cycle(4));
        assert!(c4.triangles().is_empty());
        assert_eq!(c4.chordless_4cycles(), vec![[0, 1, 2, 3]]);

        let q3 = gen(Family::Path(1)).box_power(3);
        assert!(q3.triangles().is_empty());
        assert_eq!(q3.chordless_4cycles().len(), 6);
    }

    #[test]
    fn simple_cycle_enumeration() {
        // K4 has 4 triangles and 3 Hamiltonian 4-cycles.
        let k4 = gen(Family::Complete(4));
        assert_eq!(k4.simple_cycles(3).len(), 4);
        assert_eq!(k4.simple_cycles(4).len(), 7);
        let c6 = gen(Family::Cycle(6));
        assert_eq!(c6.simple_cycles(5).len(), 0);
        assert_eq!(c6.simple_cycles(6), vec![vec![0, 1, 2, 3, 4, 5]]);
    }
}
