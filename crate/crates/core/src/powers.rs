//! Reduced powers `SP^n(G)` and token graphs `T_n(G)`.
//!
//! A vertex of either graph is a [`TokenConfig`]: a sorted multiset of `n`
//! base vertices, read as a monomial. Two configurations are adjacent when
//! one is obtained from the other by sliding a single token along an edge
//! of the base graph, i.e. `lcm(x, y) / gcd(x, y) = uv` for an edge `uv`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::comb::{self, BinomialTable};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeIndex, Graph};
use crate::DEFAULT_MAX_VERTICES;

/// Sorted multiset of base-graph vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TokenConfig(Vec<usize>);

impl TokenConfig {
    /// Sorts `tokens`.
    pub fn new(mut tokens: Vec<usize>) -> Self {
        tokens.sort_unstable();
        TokenConfig(tokens)
    }

    /// The empty configuration, i.e. the monomial 1.
    pub fn one() -> Self {
        TokenConfig(Vec::new())
    }

    pub fn tokens(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn multiplicity(&self, v: usize) -> usize {
        self.0.iter().filter(|&&w| w == v).count()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self * v`.
    pub fn times(&self, v: usize) -> Self {
        let mut t = self.0.clone();
        let pos = t.partition_point(|&w| w <= v);
        t.insert(pos, v);
        TokenConfig(t)
    }

    /// `self * other`.
    pub fn product(&self, other: &TokenConfig) -> Self {
        let mut t = self.0.clone();
        t.extend_from_slice(&other.0);
        TokenConfig::new(t)
    }

    /// `self / v`, if `v` divides `self`.
    pub fn without(&self, v: usize) -> Option<Self> {
        let pos = self.0.binary_search(&v).ok()?;
        let mut t = self.0.clone();
        t.remove(pos);
        Some(TokenConfig(t))
    }

    /// If `self / other = u / v` for single vertices `u != v`, returns
    /// `(u, v)`: the token sits on `u` in `self` and on `v` in `other`.
    pub fn moved_token(&self, other: &TokenConfig) -> Option<(usize, usize)> {
        if self.degree() != other.degree() {
            return None;
        }
        let (mut extra_self, mut extra_other) = (Vec::new(), Vec::new());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                extra_self.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                extra_other.push(b[j]);
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
            if extra_self.len() > 1 || extra_other.len() > 1 {
                return None;
            }
        }
        match (extra_self.as_slice(), extra_other.as_slice()) {
            ([u], [v]) => Some((*u, *v)),
            _ => None,
        }
    }

    /// Vertices of `0..t` not in this (squarefree) configuration.
    pub fn complement(&self, t: usize) -> Self {
        TokenConfig((0..t).filter(|v| !self.contains(*v)).collect())
    }
}

impl fmt::Display for TokenConfig {
    /// Monomial notation such as `0^2·3`; the empty configuration is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == v {
                j += 1;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}^{}", v, j - i)?;
            } else {
                write!(f, "{v}")?;
            }
            i = j;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerKind {
    /// `SP^n(G)`: any number of tokens per vertex.
    Reduced,
    /// `T_n(G)`: at most one token per vertex.
    Token,
}

/// `SP^n(G)` or `T_n(G)` with its configuration table in lexicographic order.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    base: Graph,
    n: usize,
    kind: PowerKind,
    configs: Vec<TokenConfig>,
    graph: Graph,
    ranks: BinomialTable,
}

impl PowerGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn configs(&self) -> &[TokenConfig] {
        &self.configs
    }

    pub fn config(&self, i: usize) -> &TokenConfig {
        &self.configs[i]
    }

    pub fn n_vertices(&self) -> usize {
        self.configs.len()
    }

    /// Table index of `x`, if it is a vertex of this graph.
    pub fn index_of(&self, x: &TokenConfig) -> Option<usize> {
        let t = self.base.n_vertices();
        if x.degree() != self.n || x.tokens().iter().any(|&v| v >= t) {
            return None;
        }
        let r = match self.kind {
            PowerKind::Reduced => comb::rank_multiset(&self.ranks, t, x.tokens()),
            PowerKind::Token => {
                if !x.is_squarefree() {
                    return None;
                }
                comb::rank_combination(&self.ranks, t, x.tokens())
            }
        };
        Some(r as usize)
    }
}

fn check_cap(what: &'static str, size: Option<u128>, cap: usize) -> Result<()> {
    match size {
        Some(s) if s <= cap as u128 => Ok(()),
        Some(s) => Err(Error::ResourceCap { what, size: s, cap }),
        None => Err(Error::ResourceCap {
            what,
            size: u128::MAX,
            cap,
        }),
    }
}

/// `SP^n(G)` with the default vertex cap.
pub fn reduced_power(g: &Graph, n: usize) -> Result<PowerGraph> {
    reduced_power_capped(g, n, DEFAULT_MAX_VERTICES)
}

/// `SP^n(G)`, refusing to build more than `cap` configurations.
///
/// Adjacency is generated by sliding each token of each configuration to
/// each neighbor, never by quotienting the box power `G^n`.
pub fn reduced_power_capped(g: &Graph, n: usize, cap: usize) -> Result<PowerGraph> {
    let t = g.n_vertices();
    let count = if n == 0 {
        Some(1)
    } else {
        comb::binomial((t + n - 1) as u64, n as u64)
    };
    check_cap("reduced power", count, cap)?;
    let configs: Vec<TokenConfig> = comb::multisets(t, n).into_iter().map(TokenConfig).collect();
    let ranks = BinomialTable::new(t + n, n);
    let mut adj = vec![Vec::new(); configs.len()];
    for (i, x) in configs.iter().enumerate() {
        let toks = x.tokens();
        for (p, &u) in toks.iter().enumerate() {
            if p > 0 && toks[p - 1] == u {
                continue;
            }
            for &w in g.neighbors(u) {
                let mut y = toks.to_vec();
                y[p] = w;
                y.sort_unstable();
                let j = comb::rank_multiset(&ranks, t, &y) as usize;
                if j > i {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
    }
    Ok(PowerGraph {
        base: g.clone(),
        n,
        kind: PowerKind::Reduced,
        configs,
        graph: Graph::from_adjacency(adj),
        ranks,
    })
}

/// `T_n(G)` with the default vertex cap. Empty when `n > t`.
pub fn token_graph(g: &Graph, n: usize) -> Result<PowerGraph> {
    token_graph_capped(g, n, DEFAULT_MAX_VERTICES)
}

/// `T_n(G)`, built directly from squarefree configurations.
pub fn token_graph_capped(g: &Graph, n: usize, cap: usize) -> Result<PowerGraph> {
    let t = g.n_vertices();
    check_cap("token graph", comb::binomial(t as u64, n as u64), cap)?;
    let configs: Vec<TokenConfig> = comb::combinations(t, n).into_iter().map(TokenConfig).collect();
    let ranks = BinomialTable::new(t.max(1), n);
    let mut adj = vec![Vec::new(); configs.len()];
    for (i, x) in configs.iter().enumerate() {
        for (p, &u) in x.tokens().iter().enumerate() {
            for &w in g.neighbors(u) {
                if x.contains(w) {
                    continue;
                }
                let mut y = x.tokens().to_vec();
                y[p] = w;
                y.sort_unstable();
                let j = comb::rank_combination(&ranks, t, &y) as usize;
                if j > i {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
    }
    Ok(PowerGraph {
        base: g.clone(),
        n,
        kind: PowerKind::Token,
        configs,
        graph: Graph::from_adjacency(adj),
        ranks,
    })
}

/// Verified isomorphism `T_n(G) -> T_{t-n}(G)` sending a configuration to
/// the set of unoccupied vertices.
#[derive(Debug, Clone)]
pub struct ComplementIso {
    pub target: PowerGraph,
    /// `map[i]` is the index in `target` of the complement of config `i`.
    pub map: Vec<usize>,
}

pub fn complement_iso(tok: &PowerGraph) -> Result<ComplementIso> {
    if tok.kind() != PowerKind::Token {
        return Err(Error::Parameter("complement needs a token graph".into()));
    }
    let t = tok.base().n_vertices();
    if tok.n() > t {
        return Err(Error::Parameter(format!("T_{} of a {t}-vertex graph is empty", tok.n())));
    }
    let target = token_graph(tok.base(), t - tok.n())?;
    let map: Vec<usize> = tok
        .configs()
        .iter()
        .map(|x| target.index_of(&x.complement(t)).expect("complement is squarefree"))
        .collect();
    verify_isomorphism(tok.graph(), target.graph(), &map)?;
    Ok(ComplementIso { target, map })
}

/// Checks that `map` is a bijection `V(a) -> V(b)` carrying edges onto edges.
pub fn verify_isomorphism(a: &Graph, b: &Graph, map: &[usize]) -> Result<()> {
    if a.n_vertices() != b.n_vertices() || map.len() != a.n_vertices() {
        return Err(Error::CheckFailed(format!(
            "vertex counts differ: {} vs {}",
            a.n_vertices(),
            b.n_vertices()
        )));
    }
    let mut seen = vec![false; b.n_vertices()];
    for &m in map {
        if m >= seen.len() || core::mem::replace(&mut seen[m], true) {
            return Err(Error::CheckFailed(format!("map is not injective at {m}")));
        }
    }
    if a.n_edges() != b.n_edges() {
        return Err(Error::CheckFailed(format!(
            "edge counts differ: {} vs {}",
            a.n_edges(),
            b.n_edges()
        )));
    }
    for e in a.edges() {
        if !b.has_edge(map[e.u], map[e.v]) {
            return Err(Error::CheckFailed(format!(
                "edge {}-{} maps to non-edge {}-{}",
                e.u, e.v, map[e.u], map[e.v]
            )));
        }
    }
    Ok(())
}

/// Status of the claim `SP^n(G) ≅ SP^{t-n+1}(G)` on a concrete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    /// Some isomorphism invariant differs.
    Refuted(String),
    /// Vertex count, edge count and degree sequence agree; no isomorphism
    /// was searched for.
    InvariantsAgree,
}

pub fn sp_complement_claim(g: &Graph, n: usize) -> Result<ClaimStatus> {
    let t = g.n_vertices();
    if n == 0 || n > t {
        return Err(Error::Parameter(format!("need 1 <= n <= t, got n={n}, t={t}")));
    }
    let a = reduced_power(g, n)?;
    let b = reduced_power(g, t - n + 1)?;
    let (ga, gb) = (a.graph(), b.graph());
    if ga.n_vertices() != gb.n_vertices() {
        return Ok(ClaimStatus::Refuted(format!(
            "{} vs {} vertices",
            ga.n_vertices(),
            gb.n_vertices()
        )));
    }
    if ga.n_edges() != gb.n_edges() {
        return Ok(ClaimStatus::Refuted(format!("{} vs {} edges", ga.n_edges(), gb.n_edges())));
    }
    if ga.degree_sequence() != gb.degree_sequence() {
        return Ok(ClaimStatus::Refuted("degree sequences differ".into()));
    }
    Ok(ClaimStatus::InvariantsAgree)
}

/// The 4-cycle `(ab □ cd)x = (ac·x, ad·x, bd·x, bc·x)` for distinct edges
/// `ab < cd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianSquare {
    pub e1: EdgeId,
    pub e2: EdgeId,
    pub x: TokenConfig,
    /// Config indices of `ac·x, ad·x, bd·x, bc·x` in the power graph.
    pub corners: [usize; 4],
}

impl CartesianSquare {
    pub fn corner_configs(e1: EdgeId, e2: EdgeId, x: &TokenConfig) -> [TokenConfig; 4] {
        let (a, b, c, d) = (e1.u, e1.v, e2.u, e2.v);
        [
            x.times(a).times(c),
            x.times(a).times(d),
            x.times(b).times(d),
            x.times(b).times(c),
        ]
    }
}

/// Every Cartesian square contained in `p`.
///
/// For a reduced power this is every pair of distinct edges with every
/// background monomial of degree `n - 2`. For a token graph only squares
/// whose four corners are squarefree survive, which happens exactly when
/// the edges are vertex-disjoint and `x` is squarefree and avoids their
/// endpoints.
pub fn cartesian_squares(p: &PowerGraph) -> Result<Vec<CartesianSquare>> {
    let n = p.n();
    if n < 2 {
        return Err(Error::Parameter(format!("Cartesian squares need n >= 2, got {n}")));
    }
    let g = p.base();
    let t = g.n_vertices();
    let edges = g.edges();
    let backgrounds: Vec<TokenConfig> = match p.kind() {
        PowerKind::Reduced => comb::multisets(t, n - 2).into_iter().map(TokenConfig).collect(),
        PowerKind::Token => comb::combinations(t, n - 2).into_iter().map(TokenConfig).collect(),
    };
    let mut out = Vec::new();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            if p.kind() == PowerKind::Token && e1.shares_endpoint(&e2) {
                continue;
            }
            for x in &backgrounds {
                if p.kind() == PowerKind::Token
                    && [e1.u, e1.v, e2.u, e2.v].iter().any(|&v| x.contains(v))
                {
                    continue;
                }
                let cs = CartesianSquare::corner_configs(e1, e2, x);
                let corners = [0, 1, 2, 3].map(|k| {
                    p.index_of(&cs[k]).expect("corner configuration belongs to the power graph")
                });
                out.push(CartesianSquare {
                    e1,
                    e2,
                    x: x.clone(),
                    corners,
                });
            }
        }
    }
    Ok(out)
}

/// The copy `G·x` of `G` inside `SP^n(G)`, `n = deg(x) + 1`: vertex `v`
/// maps to the index of `v·x`. Verified injective and edge-preserving.
pub fn embed_gx(p: &PowerGraph, x: &TokenConfig) -> Result<Vec<usize>> {
    if p.kind() != PowerKind::Reduced || x.degree() + 1 != p.n() {
        return Err(Error::Parameter(format!(
            "G·x needs a reduced power of degree {}",
            x.degree() + 1
        )));
    }
    let g = p.base();
    let map: Vec<usize> = (0..g.n_vertices())
        .map(|v| {
            p.index_of(&x.times(v))
                .ok_or_else(|| Error::Parameter(format!("{x} is not a configuration of the base")))
        })
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    if distinct.len() != map.len() {
        return Err(Error::CheckFailed("G·x embedding is not injective".into()));
    }
    for e in g.edges() {
        if !p.graph().has_edge(map[e.u], map[e.v]) {
            return Err(Error::CheckFailed(format!("edge {}-{} not preserved", e.u, e.v)));
        }
    }
    Ok(map)
}

/// `η(v_1, ..., v_n) = v_1 ··· v_n`.
pub fn eta(tuple: &[usize]) -> TokenConfig {
    TokenConfig::new(tuple.to_vec())
}

/// A closed walk of `G^n` lifting a closed walk of `SP^n(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLift {
    /// `trace[i]` is a tuple with `η(trace[i]) = cycle[i]`; consecutive
    /// tuples differ in one coordinate along an edge of the base.
    pub trace: Vec<Vec<usize>>,
    /// Walk from the last tuple of `trace` back to the first, made of
    /// coordinate swaps whose image under η has zero 1-chain. Empty when the
    /// trace already closes up.
    pub closing: Vec<Vec<usize>>,
}

impl CycleLift {
    /// `trace` followed by `closing`, as one closed walk.
    pub fn closed_walk(&self) -> Vec<Vec<usize>> {
        let mut w = self.trace.clone();
        w.extend(self.closing.iter().skip(1).cloned());
        w
    }
}

/// Lifts the closed walk `cycle` (first entry repeated at the end) of the
/// reduced power `p` to `G^n`.
///
/// Each step slides a token from `u` to `w`; the lift moves the
/// lowest-index coordinate holding `u`. The last tuple is then a
/// permutation of the first, and the lift is closed with transpositions:
/// to swap coordinates holding `a` and `b`, walk the first one from `a` to
/// `b` along a shortest path and then the second one back from `b` to `a`.
/// The two halves map to mutually reverse walks in `SP^n(G)`.
pub fn lift_cycle(p: &PowerGraph, cycle: &[TokenConfig]) -> Result<CycleLift> {
    if p.kind() != PowerKind::Reduced {
        return Err(Error::Parameter("lifting needs a reduced power".into()));
    }
    if cycle.len() < 2 || cycle.first() != cycle.last() {
        return Err(Error::BadWalk("first and last configurations differ".into()));
    }
    let g = p.base();
    let mut cur: Vec<usize> = cycle[0].tokens().to_vec();
    if p.index_of(&cycle[0]).is_none() {
        return Err(Error::BadWalk(format!("{} is not a vertex", cycle[0])));
    }
    let mut trace = vec![cur.clone()];
    for (i, pair) in cycle.windows(2).enumerate() {
        let (x, y) = (&pair[0], &pair[1]);
        if x == y {
            return Err(Error::BadWalk(format!("repeated configuration at step {i}")));
        }
        let (u, w) = x
            .moved_token(y)
            .filter(|&(u, w)| g.has_edge(u, w))
            .ok_or_else(|| Error::BadWalk(format!("step {i}: {x} and {y} are not adjacent")))?;
        let pos = cur.iter().position(|&c| c == u).expect("u divides x");
        cur[pos] = w;
        trace.push(cur.clone());
    }
    let start = trace[0].clone();
    let mut closing = Vec::new();
    if cur != start {
        closing.push(cur.clone());
        for i in 0..cur.len() {
            if cur[i] == start[i] {
                continue;
            }
            let j = (i + 1..cur.len())
                .find(|&j| cur[j] == start[i] && cur[j] != start[j])
                .or_else(|| (i + 1..cur.len()).find(|&j| cur[j] == start[i]))
                .expect("last tuple is a permutation of the first");
            let (a, b) = (cur[i], cur[j]);
            let path = g
                .shortest_path(a, b)
                .ok_or_else(|| Error::BadWalk("tokens in different components".into()))?;
            for &q in &path[1..] {
                cur[i] = q;
                closing.push(cur.clone());
            }
            for &q in path.iter().rev().skip(1) {
                cur[j] = q;
                closing.push(cur.clone());
            }
        }
        debug_assert_eq!(cur, start);
    }
    Ok(CycleLift { trace, closing })
}

/// Integer 1-chain on the edges of a graph, keyed by `(u, v)` with `u < v`.
pub type Chain = BTreeMap<EdgeId, i64>;

fn chain_add(chain: &mut Chain, e: EdgeId, c: i64) {
    if c == 0 {
        return;
    }
    let entry = chain.entry(e).or_insert(0);
    *entry += c;
    if *entry == 0 {
        chain.remove(&e);
    }
}

/// `[a, b]`: `+ab` if `a < b`, `-ba` if `a > b`, zero if equal.
pub fn oriented_edge(chain: &mut Chain, a: usize, b: usize, coeff: i64) {
    if a < b {
        chain_add(chain, EdgeId { u: a, v: b }, coeff);
    } else if a > b {
        chain_add(chain, EdgeId { u: b, v: a }, -coeff);
    }
}

/// `[P] = Σ [p_i, p_{i+1}]` for a walk given by vertex ids.
pub fn walk_chain(walk: &[usize]) -> Chain {
    let mut c = Chain::new();
    for w in walk.windows(2) {
        oriented_edge(&mut c, w[0], w[1], 1);
    }
    c
}

/// Chain of the walk `cycle` of configurations in `p`.
pub fn config_walk_chain(p: &PowerGraph, walk: &[TokenConfig]) -> Result<Chain> {
    let ids: Vec<usize> = walk
        .iter()
        .map(|x| p.index_of(x).ok_or_else(|| Error::BadWalk(format!("{x} is not a vertex"))))
        .collect::<Result<_>>()?;
    Ok(walk_chain(&ids))
}

/// Chain of `η` applied to a walk of tuples in `G^n`.
pub fn eta_chain(p: &PowerGraph, walk: &[Vec<usize>]) -> Result<Chain> {
    let configs: Vec<TokenConfig> = walk.iter().map(|t| eta(t)).collect();
    config_walk_chain(p, &configs)
}

/// `φ`: sends the oriented edge `[x, y]` of `SP^n(G)`, with `x / y = u / v`,
/// to `[u, v]`, extended linearly. Orientation follows table order on
/// configurations and vertex-id order on the base.
pub fn project_chain_phi(p: &PowerGraph, chain: &Chain) -> Result<Chain> {
    let mut out = Chain::new();
    for (e, &c) in chain {
        let (x, y) = (p.configs.get(e.u), p.configs.get(e.v));
        let (x, y) = match (x, y) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::UnknownEdge(e.u, e.v)),
        };
        let (u, v) = x
            .moved_token(y)
            .filter(|_| p.graph().has_edge(e.u, e.v))
            .ok_or(Error::UnknownEdge(e.u, e.v))?;
        oriented_edge(&mut out, u, v, c);
    }
    Ok(out)
}

/// Integer points of `Z^d` with the induced grid adjacency.
pub(crate) fn lattice_graph(points: &[Vec<i64>]) -> Graph {
    let index: BTreeMap<&[i64], usize> =
        points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut adj = vec![Vec::new(); points.len()];
    for (i, p) in points.iter().enumerate() {
        let mut q = p.clone();
        for k in 0..q.len() {
            q[k] += 1;
            if let Some(&j) = index.get(q.as_slice()) {
                adj[i].push(j);
                adj[j].push(i);
            }
            q[k] -= 1;
        }
    }
    Graph::from_adjacency(adj)
}

fn map_into(points: &[Vec<i64>], images: &[Vec<i64>]) -> Result<Vec<usize>> {
    let index: BTreeMap<&[i64], usize> =
        points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    images
        .iter()
        .map(|im| {
            index
                .get(im.as_slice())
                .copied()
                .ok_or_else(|| Error::CheckFailed(format!("{im:?} lies outside the target")))
        })
        .collect()
}

/// Outcome of an explicit-isomorphism check: each entry names a verified
/// isomorphism and the vertex/edge counts of its two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub checks: Vec<IsoCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCheck {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
}

fn all_points(dim: usize, lo: i64, hi: i64, keep: impl Fn(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![lo; dim];
    loop {
        if keep(&cur) {
            out.push(cur.clone());
        }
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi {
                cur[k] += 1;
                for c in cur[k + 1..].iter_mut() {
                    *c = lo;
                }
                break;
            }
        }
    }
}

/// `Δ_{m,n}`: points `0 <= x_1 <= ... <= x_m <= n` of `Z^m`.
pub fn simplex_delta(m: usize, n: usize) -> (Vec<Vec<i64>>, Graph) {
    let pts = all_points(m, 0, n as i64, |x| x.windows(2).all(|w| w[0] <= w[1]));
    let g = lattice_graph(&pts);
    (pts, g)
}

/// `Γ_{n,m}`: points `0 <= x_1 < ... < x_n <= m` of `Z^n`.
pub fn simplex_gamma(n: usize, m: usize) -> (Vec<Vec<i64>>, Graph) {
    let pts = all_points(n, 0, m as i64, |x| x.windows(2).all(|w| w[0] < w[1]));
    let g = lattice_graph(&pts);
    (pts, g)
}

/// `Θ_{m,n}`: points `x >= 0` of `Z^m` with `Σ x_i <= n`.
pub fn simplex_theta(m: usize, n: usize) -> (Vec<Vec<i64>>, Graph) {
    let pts = all_points(m, 0, n as i64, |x| x.iter().sum::<i64>() <= n as i64);
    let g = lattice_graph(&pts);
    (pts, g)
}

/// Verifies `SP^n(I_m) ≅ Δ_{m,n}` through `φ_k(x) = Σ_{i > m-k} x(i)`, the
/// token description `T_n(I_m) ≅ Γ_{n,m}`, and the shift
/// `Δ_{m,n} + (0, 1, ..., m-1) = Γ_{m,n+m-1}` giving
/// `SP^n(I_m) ≅ T_m(I_{n+m-1})`.
pub fn path_iso(m: usize, n: usize) -> Result<IsoReport> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter(format!("need m, n >= 1, got m={m}, n={n}")));
    }
    let im = Graph::generate(crate::graph::Family::Path(m))?;
    let sp = reduced_power(&im, n)?;
    let (delta_pts, delta) = simplex_delta(m, n);
    let images: Vec<Vec<i64>> = sp
        .configs()
        .iter()
        .map(|x| {
            (1..=m)
                .map(|k| (m - k + 1..=m).map(|i| x.multiplicity(i) as i64).sum())
                .collect()
        })
        .collect();
    let map = map_into(&delta_pts, &images)?;
    verify_isomorphism(sp.graph(), &delta, &map)?;
    let mut checks = vec![IsoCheck {
        name: format!("SP^{n}(I_{m}) ≅ Δ_{{{m},{n}}}"),
        vertices: delta.n_vertices(),
        edges: delta.n_edges(),
    }];

    checks.push(token_path_iso(n, m)?);

    // Shift Δ_{m,n} onto Γ_{m,n+m-1}, then read Γ as T_m(I_{n+m-1}).
    let (gamma_pts, gamma) = simplex_gamma(m, n + m - 1);
    let shifted: Vec<Vec<i64>> = delta_pts
        .iter()
        .map(|x| x.iter().enumerate().map(|(i, &c)| c + i as i64).collect())
        .collect();
    let shift = map_into(&gamma_pts, &shifted)?;
    verify_isomorphism(&delta, &gamma, &shift)?;
    let wide = Graph::generate(crate::graph::Family::Path(n + m - 1))?;
    let tok = token_graph(&wide, m)?;
    let composed: Vec<usize> = map
        .iter()
        .map(|&d| {
            let pt: Vec<usize> = gamma_pts[shift[d]].iter().map(|&c| c as usize).collect();
            tok.index_of(&TokenConfig::new(pt)).expect("Γ point is a token configuration")
        })
        .collect();
    verify_isomorphism(sp.graph(), tok.graph(), &composed)?;
    checks.push(IsoCheck {
        name: format!("SP^{n}(I_{m}) ≅ T_{m}(I_{})", n + m - 1),
        vertices: tok.n_vertices(),
        edges: tok.graph().n_edges(),
    });
    Ok(IsoReport { checks })
}

/// Verifies `T_n(I_m) ≅ Γ_{n,m}`, a configuration read as its increasing
/// tuple of occupied positions.
pub fn token_path_iso(n: usize, m: usize) -> Result<IsoCheck> {
    let im = Graph::generate(crate::graph::Family::Path(m))?;
    let tok = token_graph(&im, n)?;
    let (pts, gamma) = simplex_gamma(n, m);
    let images: Vec<Vec<i64>> = tok
        .configs()
        .iter()
        .map(|x| x.tokens().iter().map(|&v| v as i64).collect())
        .collect();
    let map = map_into(&pts, &images)?;
    verify_isomorphism(tok.graph(), &gamma, &map)?;
    Ok(IsoCheck {
        name: format!("T_{n}(I_{m}) ≅ Γ_{{{n},{m}}}"),
        vertices: gamma.n_vertices(),
        edges: gamma.n_edges(),
    })
}

/// Verifies `SP^n(S_m) ≅ Θ_{m,n}` through `ψ(x) = (x(1), ..., x(m))`, and
/// that `ψ` carries `T_n(S_m)` onto the subgraph of the cube `Q_m` induced
/// by coordinate sums `n - 1` and `n`.
pub fn star_iso(m: usize, n: usize) -> Result<IsoReport> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter(format!("need m, n >= 1, got m={m}, n={n}")));
    }
    let sm = Graph::generate(crate::graph::Family::Star(m))?;
    let psi = |x: &TokenConfig| -> Vec<i64> { (1..=m).map(|i| x.multiplicity(i) as i64).collect() };

    let sp = reduced_power(&sm, n)?;
    let (theta_pts, theta) = simplex_theta(m, n);
    let images: Vec<Vec<i64>> = sp.configs().iter().map(psi).collect();
    let map = map_into(&theta_pts, &images)?;
    verify_isomorphism(sp.graph(), &theta, &map)?;
    let mut checks = vec![IsoCheck {
        name: format!("SP^{n}(S_{m}) ≅ Θ_{{{m},{n}}}"),
        vertices: theta.n_vertices(),
        edges: theta.n_edges(),
    }];

    let tok = token_graph(&sm, n)?;
    let cube_pts = all_points(m, 0, 1, |x| {
        let s = x.iter().sum::<i64>();
        s + 1 == n as i64 || s == n as i64
    });
    let cube = lattice_graph(&cube_pts);
    let images: Vec<Vec<i64>> = tok.configs().iter().map(psi).collect();
    let map = map_into(&cube_pts, &images)?;
    verify_isomorphism(tok.graph(), &cube, &map)?;
    checks.push(IsoCheck {
        name: format!("T_{n}(S_{m}) ≅ Q_{m}[sum ∈ {{{}, {n}}}]", n as i64 - 1),
        vertices: cube.n_vertices(),
        edges: cube.n_edges(),
    });
    Ok(IsoReport { checks })
}

/// Index of `e` in the sorted edge list of `p`'s graph.
pub fn power_edge_index(p: &PowerGraph) -> EdgeIndex {
    EdgeIndex::new(p.graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn gen(f: Family) -> Graph {
        Graph::generate(f).unwrap()
    }

    fn cfg(v: &[usize]) -> TokenConfig {
        TokenConfig::new(v.to_vec())
    }

    #[test]
    fn config_display_and_algebra() {
        assert_eq!(alloc::format!("{}", cfg(&[3, 0, 0])), "0^2·3");
        assert_eq!(alloc::format!("{}", TokenConfig::one()), "1");
        assert_eq!(cfg(&[0, 0, 3]).moved_token(&cfg(&[0, 3, 4])), Some((0, 4)));
        assert_eq!(cfg(&[0, 1]).moved_token(&cfg(&[2, 3])), None);
        assert_eq!(cfg(&[1]).moved_token(&cfg(&[1])), None);
        assert!(cfg(&[1, 2]).is_squarefree());
        assert!(!cfg(&[1, 1]).is_squarefree());
        assert_eq!(cfg(&[1, 3]).complement(5), cfg(&[0, 2, 4]));
    }

    #[test]
    fn first_power_is_the_graph() {
        for g in [gen(Family::Cycle(5)), gen(Family::Star(3)), gen(Family::Complete(4))] {
            assert_eq!(reduced_power(&g, 1).unwrap().graph(), &g);
            assert_eq!(token_graph(&g, 1).unwrap().graph(), &g);
        }
    }

    #[test]
    fn small_reduced_powers() {
        let k2 = gen(Family::Path(1));
        let sp = reduced_power(&k2, 2).unwrap();
        assert_eq!(sp.configs(), &[cfg(&[0, 0]), cfg(&[0, 1]), cfg(&[1, 1])]);
        assert_eq!(sp.graph().edges(), vec![EdgeId::new(0, 1), EdgeId::new(1, 2)]);

        let sp = reduced_power(&gen(Family::Complete(3)), 2).unwrap();
        assert_eq!((sp.n_vertices(), sp.graph().n_edges()), (6, 9));

        let sp0 = reduced_power(&k2, 0).unwrap();
        assert_eq!(sp0.configs(), &[TokenConfig::one()]);
    }

    #[test]
    fn reduced_power_cap() {
        let g = gen(Family::Complete(10));
        assert!(matches!(
            reduced_power_capped(&g, 5, 100),
            Err(Error::ResourceCap { size: 2002, .. })
        ));
    }

    #[test]
    fn token_graph_examples() {
        let t = token_graph(&gen(Family::Star(3)), 2).unwrap();
        assert_eq!(t.n_vertices(), 6);
        assert!(t.graph().is_connected());
        assert!(t.graph().degree_sequence().iter().all(|&d| d == 2));

        let c5 = gen(Family::Cycle(5));
        assert_eq!(token_graph(&c5, 5).unwrap().n_vertices(), 1);
        assert_eq!(token_graph(&c5, 6).unwrap().n_vertices(), 0);

        for m in 1..=6 {
            let sm = gen(Family::Star(m));
            for n in 1..=m {
                let t = token_graph(&sm, n).unwrap();
                assert_eq!(t.n_vertices() as u128, comb::binomial(m as u64 + 1, n as u64).unwrap());
                let degs: BTreeSet<usize> = (0..t.n_vertices()).map(|v| t.graph().degree(v)).collect();
                let expect: BTreeSet<usize> = [n, m - n + 1].into_iter().collect();
                assert_eq!(degs, expect, "T_{n}(S_{m})");
            }
        }
    }

    #[test]
    fn complement_examples() {
        let c5 = gen(Family::Cycle(5));
        let iso = complement_iso(&token_graph(&c5, 1).unwrap()).unwrap();
        assert_eq!(iso.target.n(), 4);
        assert_eq!(iso.target.graph().n_edges(), 5);

        let t0 = complement_iso(&token_graph(&c5, 0).unwrap()).unwrap();
        assert_eq!(t0.target.n_vertices(), 1);

        let s3 = gen(Family::Star(3));
        let iso = complement_iso(&token_graph(&s3, 2).unwrap()).unwrap();
        assert_eq!(iso.target.n_vertices(), 6);
        assert!(complement_iso(&reduced_power(&s3, 2).unwrap()).is_err());
    }

    #[test]
    fn sp_complement_claim_fails_on_k2() {
        let k2 = gen(Family::Path(1));
        assert!(matches!(sp_complement_claim(&k2, 2).unwrap(), ClaimStatus::Refuted(_)));
        assert!(matches!(sp_complement_claim(&k2, 1).unwrap(), ClaimStatus::Refuted(_)));
        // t = 3, n = 2 pairs SP^2 with itself.
        let k3 = gen(Family::Complete(3));
        assert_eq!(sp_complement_claim(&k3, 2).unwrap(), ClaimStatus::InvariantsAgree);
    }

    #[test]
    fn cartesian_square_counts() {
        let i2 = gen(Family::Path(2));
        let sq = cartesian_squares(&reduced_power(&i2, 2).unwrap()).unwrap();
        assert_eq!(sq.len(), 1);
        assert_eq!((sq[0].e1, sq[0].e2), (EdgeId::new(0, 1), EdgeId::new(1, 2)));
        assert_eq!(sq[0].x, TokenConfig::one());

        let c5 = gen(Family::Cycle(5));
        let p = reduced_power(&c5, 2).unwrap();
        let sq = cartesian_squares(&p).unwrap();
        assert_eq!(sq.len(), 10);
        for s in &sq {
            for k in 0..4 {
                assert!(p.graph().has_edge(s.corners[k], s.corners[(k + 1) % 4]));
            }
        }
        assert!(cartesian_squares(&reduced_power(&c5, 1).unwrap()).is_err());
    }

    #[test]
    fn token_squares_match_brute_force() {
        // T_3(C_6): vertex-disjoint edge pairs times a vertex off both.
        let c6 = gen(Family::Cycle(6));
        let tok = token_graph(&c6, 3).unwrap();
        let sq = cartesian_squares(&tok).unwrap();
        let edges = c6.edges();
        let mut expect = 0;
        for (i, e1) in edges.iter().enumerate() {
            for e2 in &edges[i + 1..] {
                if e1.shares_endpoint(e2) {
                    continue;
                }
                expect += (0..6).filter(|&w| !e1.touches(w) && !e2.touches(w)).count();
            }
        }
        assert_eq!(sq.len(), expect);
        assert_eq!(expect, 18);
    }

    #[test]
    fn gx_embeddings() {
        let c5 = gen(Family::Cycle(5));
        let p1 = reduced_power(&c5, 1).unwrap();
        assert_eq!(embed_gx(&p1, &TokenConfig::one()).unwrap(), vec![0, 1, 2, 3, 4]);
        let p2 = reduced_power(&c5, 2).unwrap();
        let m = embed_gx(&p2, &cfg(&[0])).unwrap();
        assert_eq!(m.len(), 5);
        let k2 = gen(Family::Path(1));
        let p = reduced_power(&k2, 2).unwrap();
        assert_eq!(embed_gx(&p, &cfg(&[0])).unwrap(), vec![0, 1]);
    }

    #[test]
    fn eta_is_symmetric() {
        assert_eq!(eta(&[0, 1]), cfg(&[0, 1]));
        assert_eq!(eta(&[1, 0]), cfg(&[0, 1]));
        assert_eq!(eta(&[2, 2, 2]), cfg(&[2, 2, 2]));
    }

    #[test]
    fn lift_of_cartesian_square() {
        let i1 = gen(Family::Path(1));
        let g = i1.box_product(&i1); // C_4 on 0-1, 0-2, 1-3, 2-3
        let p = reduced_power(&g, 2).unwrap();
        let (ab, cd) = (EdgeId::new(0, 1), EdgeId::new(2, 3));
        let cs = CartesianSquare::corner_configs(ab, cd, &TokenConfig::one());
        let mut walk: Vec<TokenConfig> = cs.to_vec();
        walk.push(cs[0].clone());
        let lift = lift_cycle(&p, &walk).unwrap();
        assert!(lift.closing.is_empty());
        assert_eq!(
            lift.trace,
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 2], vec![0, 2]]
        );
    }

    #[test]
    fn lift_closes_with_swaps() {
        // The tokens trade places going around C_5, so the naive trace ends
        // at the swapped tuple (2, 0).
        let c5 = gen(Family::Cycle(5));
        let p = reduced_power(&c5, 2).unwrap();
        let walk: Vec<TokenConfig> = [[0, 2], [0, 1], [1, 4], [0, 4], [0, 3], [0, 2]]
            .iter()
            .map(|v| cfg(v))
            .collect();
        let lift = lift_cycle(&p, &walk).unwrap();
        for (tuple, x) in lift.trace.iter().zip(&walk) {
            assert_eq!(&eta(tuple), x);
        }
        assert_eq!(lift.trace.last().unwrap(), &vec![2, 0]);
        assert!(!lift.closing.is_empty());
        let closed = lift.closed_walk();
        assert_eq!(closed.first(), closed.last());
        assert!(eta_chain(&p, &lift.closing).unwrap().is_empty());
        let whole = eta_chain(&p, &closed).unwrap();
        assert_eq!(whole, config_walk_chain(&p, &walk).unwrap());
    }

    #[test]
    fn lift_rejects_bad_walks() {
        let c5 = gen(Family::Cycle(5));
        let p = reduced_power(&c5, 2).unwrap();
        let open = [cfg(&[0, 0]), cfg(&[0, 1])];
        assert!(matches!(lift_cycle(&p, &open), Err(Error::BadWalk(_))));
        let dup = [cfg(&[0, 0]), cfg(&[0, 0])];
        assert!(matches!(lift_cycle(&p, &dup), Err(Error::BadWalk(_))));
        let jump = [cfg(&[0, 0]), cfg(&[0, 2]), cfg(&[0, 0])];
        assert!(matches!(lift_cycle(&p, &jump), Err(Error::BadWalk(_))));
    }

    #[test]
    fn phi_examples() {
        let c5 = gen(Family::Cycle(5));
        let p = reduced_power(&c5, 2).unwrap();
        for s in cartesian_squares(&p).unwrap() {
            let c = s.corners;
            let chain = walk_chain(&[c[0], c[1], c[2], c[3], c[0]]);
            assert!(project_chain_phi(&p, &chain).unwrap().is_empty());
        }
        let x = cfg(&[3]);
        let m = embed_gx(&p, &x).unwrap();
        let cyc = [0, 1, 2, 3, 4, 0];
        let lifted: Vec<usize> = cyc.iter().map(|&v| m[v]).collect();
        let phi = project_chain_phi(&p, &walk_chain(&lifted)).unwrap();
        assert_eq!(phi, walk_chain(&cyc));

        let a = p.index_of(&cfg(&[1, 4])).unwrap();
        let b = p.index_of(&cfg(&[2, 4])).unwrap();
        let phi = project_chain_phi(&p, &walk_chain(&[b, a])).unwrap();
        assert_eq!(phi, walk_chain(&[2, 1]));
    }

    #[test]
    fn path_and_star_isomorphisms() {
        let r = path_iso(2, 2).unwrap();
        assert_eq!(r.checks[0].vertices, 6);
        let r = path_iso(1, 1).unwrap();
        assert_eq!((r.checks[0].vertices, r.checks[0].edges), (2, 1));
        let r = path_iso(2, 3).unwrap();
        assert_eq!(r.checks[0].vertices, 10);
        assert_eq!(r.checks[2].vertices, 10);

        for n in 1..=4 {
            let r = star_iso(1, n).unwrap();
            assert_eq!((r.checks[0].vertices, r.checks[0].edges), (n + 1, n));
        }
        let r = star_iso(3, 2).unwrap();
        assert_eq!(r.checks[0].vertices, 10);
        assert_eq!(r.checks[1].vertices, 6);
    }
}
