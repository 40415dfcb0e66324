//! Named graphs and the fixture sets the verification suites sweep over.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tokenpower_core::{Family, Graph};

use crate::error::{CliError, Result};

/// A graph together with the name it is reported under.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
}

impl Fixture {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Fixture {
            name: name.into(),
            graph,
        }
    }

    pub fn named(name: &str) -> Result<Self> {
        Ok(Fixture::new(name, parse_named(name)?))
    }
}

const NAMED_HELP: &str = "path:M, cycle:M, star:M, complete:T, wedge:K:M, klein:S, \
                          tail:C:L, twin-pentagons";

fn usage(msg: String) -> CliError {
    CliError::Usage(format!("{msg} (known graphs: {NAMED_HELP})"))
}

/// Splits `klein5` into `klein` and `5`; names already using `:` or with
/// no trailing digits are left alone.
fn split_compact(name: &str) -> Vec<String> {
    if name.contains(':') {
        return name.split(':').map(str::to_owned).collect();
    }
    let cut = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if cut == 0 || cut == name.len() || name[..cut].ends_with('-') {
        vec![name.to_owned()]
    } else {
        vec![name[..cut].to_owned(), name[cut..].to_owned()]
    }
}

/// Parses names such as `cycle:5`, `wedge:2:5`, `klein5` or `twin-pentagons`.
pub fn parse_named(name: &str) -> Result<Graph> {
    let parts = split_compact(name.trim());
    let args: Vec<usize> = parts[1..]
        .iter()
        .map(|a| a.parse().map_err(|_| usage(format!("bad number {a:?} in {name:?}"))))
        .collect::<Result<_>>()?;
    let family = match (parts[0].as_str(), args.as_slice()) {
        ("path" | "I", &[m]) => Family::Path(m),
        ("cycle" | "C", &[m]) => Family::Cycle(m),
        ("star" | "S", &[m]) => Family::Star(m),
        ("complete" | "K", &[t]) => Family::Complete(t),
        ("wedge", &[k, m]) => Family::WedgeCycles { k, m },
        ("klein", &[s]) => Family::KleinGrid(s),
        ("tail", &[c, l]) => return cycle_with_tail(c, l),
        ("twin-pentagons", &[]) => return Ok(twin_pentagons()),
        _ => return Err(usage(format!("unknown graph {name:?}"))),
    };
    Ok(Graph::generate(family)?)
}

/// `C_c` on `0..c` with a path of `len` further vertices hanging off 0.
pub fn cycle_with_tail(c: usize, len: usize) -> Result<Graph> {
    if c < 3 {
        return Err(CliError::Usage(format!("tail needs a cycle of length >= 3, got {c}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut prev = 0;
    for j in c..c + len {
        edges.push((prev, j));
        prev = j;
    }
    Ok(Graph::from_edges(c + len, &edges)?)
}

/// Two pentagons on `0..5` and `5..10`, joined by the edges `0-5` and
/// `1-5`, which close the triangle `0, 1, 5`.
pub fn twin_pentagons() -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for base in [0, 5] {
        edges.extend((0..5).map(|i| (base + i, base + (i + 1) % 5)));
    }
    edges.extend([(0, 5), (1, 5)]);
    Graph::from_edges(10, &edges).expect("fixed edge list is simple")
}

fn mask_graph(t: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..t {
        for v in u + 1..t {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(t, &edges).expect("mask graphs are simple")
}

/// Bit position of pair `u < v` in the upper-triangle order used by
/// [`mask_graph`].
fn pair_bit(t: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * t - u - 1) / 2 + (v - u - 1)
}

fn permutations(t: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; t], &mut out);
    out
}

/// One representative per isomorphism class of connected simple graphs
/// on `1..=max_t` vertices: the edge mask that is least among all its
/// relabelings. Graphs are ordered by vertex count, then by mask.
pub fn connected_graphs_up_to(max_t: usize) -> Vec<Graph> {
    assert!(max_t <= 7, "exhaustive generation is limited to 7 vertices");
    let mut out = Vec::new();
    for t in 1..=max_t {
        let pairs: Vec<(usize, usize)> =
            (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v))).collect();
        let perms = permutations(t);
        let images: Vec<Vec<u32>> = perms
            .iter()
            .map(|p| pairs.iter().map(|&(u, v)| 1u32 << pair_bit(t, p[u], p[v])).collect())
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let canonical = images.iter().all(|img| {
                let relabeled: u32 = img
                    .iter()
                    .enumerate()
                    .filter(|&(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &bit)| bit)
                    .sum();
                relabeled >= mask
            });
            if canonical {
                let g = mask_graph(t, mask);
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Connected graph on `t` vertices: a random spanning tree plus each
/// remaining pair with probability `density`.
pub fn random_connected(rng: &mut ChaCha8Rng, t: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..t {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..t {
        for v in u + 1..t {
            if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(t, &edges).expect("generated edges are simple")
}

/// True when some 4-cycle has a chord. Such graphs have 4-cycles in their
/// token graphs that are neither Cartesian squares nor local exchanges.
pub fn has_chorded_square(g: &Graph) -> bool {
    g.simple_cycles(4)
        .iter()
        .any(|c| c.len() == 4 && (g.has_edge(c[0], c[2]) || g.has_edge(c[1], c[3])))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graphs for the local-exchange count: the two tailed fixtures, then
/// `random` seeded connected graphs on `8..=9` vertices that have a
/// triangle or 4-cycle but no chorded 4-cycle.
pub fn exchange_fixtures(seed: u64, random: usize) -> Vec<Fixture> {
    let mut out = vec![
        Fixture::named("tail:3:5").expect("built-in name"),
        Fixture::named("tail:4:4").expect("built-in name"),
    ];
    let mut r = rng(seed);
    let mut i = 0;
    while out.len() < 2 + random {
        let t = 8 + (i % 2);
        let g = random_connected(&mut r, t, 0.12);
        let has_cycles = !g.triangles().is_empty() || !g.chordless_4cycles().is_empty();
        if has_cycles && !has_chorded_square(&g) {
            out.push(Fixture::new(format!("random-exchange:{seed}:{i}"), g));
        }
        i += 1;
    }
    out
}

/// Ten graphs for the token complement check.
pub fn complement_fixtures() -> Vec<Fixture> {
    ["path:4", "cycle:5", "cycle:6", "star:4", "complete:4", "wedge:2:4", "tail:3:2", "tail:4:2", "klein:3", "twin-pentagons"]
        .iter()
        .map(|s| Fixture::named(s).expect("built-in name"))
        .collect()
}

/// Pairs whose box product is checked against the direct sum of homology.
pub fn product_pairs() -> Vec<(Fixture, Fixture)> {
    [
        ("cycle:5", "path:2"),
        ("cycle:5", "cycle:5"),
        ("cycle:4", "cycle:6"),
        ("complete:3", "cycle:5"),
        ("wedge:2:5", "path:1"),
        ("klein:3", "path:1"),
        ("star:3", "cycle:6"),
    ]
    .iter()
    .map(|(a, b)| (Fixture::named(a).expect("built-in name"), Fixture::named(b).expect("built-in name")))
    .collect()
}
