//! Finite group presentations: the edge-path presentation of a 2-complex,
//! Tietze simplification, and abelianization.
//!
//! A word is a list of nonzero letters; `+g` is generator `g` (1-based) and
//! `-g` its inverse.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complexes::TwoComplex;
use crate::error::{Error, Result};
use crate::homology::AbelianGroupDesc;
use crate::linalg::{self, SparseMatrix};

pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub n_generators: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Checks that letters are in range and nonzero, and freely reduces
    /// every relator.
    pub fn new(n_generators: usize, relators: Vec<Word>) -> Result<Self> {
        for w in &relators {
            if let Some(&l) = w
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > n_generators)
            {
                return Err(Error::Parameter(format!(
                    "letter {l} is not a generator of a {n_generators}-generator presentation"
                )));
            }
        }
        Ok(Presentation {
            n_generators,
            relators: relators.iter().map(|w| free_reduce(w)).collect(),
        })
    }

    /// Total number of letters over all relators.
    pub fn length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.n_generators == 0
    }

    /// `Some(rank)` when there are no relators left.
    pub fn free_rank(&self) -> Option<usize> {
        self.relators.is_empty().then_some(self.n_generators)
    }
}

/// Letter name: `a`..`z`, then `x27`, `x28`, ...
pub fn generator_name(g: usize) -> String {
    if (1..=26).contains(&g) {
        String::from(char::from(b'a' + (g - 1) as u8))
    } else {
        format!("x{g}")
    }
}

pub fn word_to_string(w: &[i32]) -> String {
    if w.is_empty() {
        return String::from("1");
    }
    let letters: Vec<String> = w
        .iter()
        .map(|&l| {
            let name = generator_name(l.unsigned_abs() as usize);
            if l < 0 {
                format!("{name}^-1")
            } else {
                name
            }
        })
        .collect();
    letters.join(" ")
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.n_generators).map(generator_name).collect();
        let rels: Vec<String> = self.relators.iter().map(|w| word_to_string(w)).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Freely and cyclically reduces `w`.
pub fn cyclic_reduce(w: &[i32]) -> Word {
    let r = free_reduce(w);
    let mut lo = 0;
    let mut hi = r.len();
    while hi - lo >= 2 && r[lo] == -r[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    r[lo..hi].to_vec()
}

pub fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Least rotation of `w` or of its inverse; equal for relators that
/// generate the same normal subgroup by conjugation and inversion.
fn canonical_relator(w: &[i32]) -> Word {
    let inv = inverse(w);
    let mut best = w.to_vec();
    for base in [w, &inv[..]] {
        for i in 0..base.len() {
            let rot: Word = base[i..].iter().chain(&base[..i]).copied().collect();
            if (rot.len(), &rot) < (best.len(), &best) {
                best = rot;
            }
        }
    }
    best
}

fn normalize(relators: Vec<Word>) -> Vec<Word> {
    let set: BTreeSet<(usize, Word)> = relators
        .into_iter()
        .map(|w| cyclic_reduce(&w))
        .filter(|w| !w.is_empty())
        .map(|w| {
            let c = canonical_relator(&w);
            (c.len(), c)
        })
        .collect();
    set.into_iter().map(|(_, w)| w).collect()
}

/// Generators are the edges outside a breadth-first spanning tree rooted at
/// vertex 0, numbered in edge order; each face contributes its boundary
/// word, reading an edge `u < v` forward as `+g` and backward as `-g`.
pub fn presentation_from_complex(x: &TwoComplex) -> Result<Presentation> {
    let skeleton = x.skeleton();
    if x.n_vertices() == 0 || !skeleton.is_connected() {
        return Err(Error::Disconnected);
    }
    let parents = skeleton.bfs_parents(0);
    let mut generator = BTreeMap::new();
    for e in x.edges() {
        if parents[e.u] != e.v && parents[e.v] != e.u {
            let next = generator.len() as i32 + 1;
            generator.insert(*e, next);
        }
    }
    let relators = x
        .faces()
        .iter()
        .map(|f| {
            let k = f.len();
            let word: Word = (0..k)
                .filter_map(|i| {
                    let (a, b) = (f[i], f[(i + 1) % k]);
                    let e = crate::graph::EdgeId::new(a, b);
                    generator.get(&e).map(|&g| if a < b { g } else { -g })
                })
                .collect();
            free_reduce(&word)
        })
        .collect();
    Ok(Presentation {
        n_generators: generator.len(),
        relators,
    })
}

/// Replaces `+g` by `rep` and `-g` by its inverse, then shifts generators
/// above `g` down by one.
fn substitute(w: &[i32], g: i32, rep: &[i32]) -> Word {
    let rep_inv = inverse(rep);
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        if l == g {
            out.extend_from_slice(rep);
        } else if l == -g {
            out.extend_from_slice(&rep_inv);
        } else {
            out.push(l);
        }
    }
    out.into_iter()
        .map(|l| if l.abs() > g { l - l.signum() } else { l })
        .collect()
}

/// Simplifies by Tietze moves, performing at most `budget` generator
/// eliminations.
///
/// Relators are kept freely and cyclically reduced, empty ones dropped and
/// duplicates (up to rotation and inversion) merged. A generator occurring
/// exactly once in a relator is solved for and substituted everywhere else.
/// Relators are tried shortest first, and for each, the generator with the
/// fewest occurrences elsewhere; a move is skipped if it would push the
/// total relator length past twice the starting length (plus slack).
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let mut gens = p.n_generators;
    let mut rels = normalize(p.relators.clone());
    let limit = 2 * p.length() + 64;
    for _ in 0..budget {
        let mut occurrences: BTreeMap<i32, usize> = BTreeMap::new();
        for w in &rels {
            for &l in w {
                *occurrences.entry(l.abs()).or_insert(0) += 1;
            }
        }
        let mut applied = false;
        'search: for ri in 0..rels.len() {
            let r = &rels[ri];
            let mut local: BTreeMap<i32, usize> = BTreeMap::new();
            for &l in r {
                *local.entry(l.abs()).or_insert(0) += 1;
            }
            let mut candidates: Vec<(usize, i32)> = local
                .iter()
                .filter(|&(_, &c)| c == 1)
                .map(|(&g, _)| (occurrences[&g] - 1, g))
                .collect();
            candidates.sort_unstable();
            for (_, g) in candidates {
                let pos = r.iter().position(|&l| l.abs() == g).unwrap();
                let eps = r[pos].signum();
                let rest: Word = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
                // g^eps · rest = 1
                let rep = if eps > 0 { inverse(&rest) } else { rest };
                let next: Vec<Word> = rels
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != ri)
                    .map(|(_, w)| substitute(w, g, &rep))
                    .collect();
                let next = normalize(next);
                if next.iter().map(Vec::len).sum::<usize>() <= limit {
                    rels = next;
                    gens -= 1;
                    applied = true;
                    break 'search;
                }
            }
        }
        if !applied {
            break;
        }
    }
    Presentation {
        n_generators: gens,
        relators: rels,
    }
}

/// Exponent-sum matrix, one row per relator.
pub fn exponent_sums(p: &Presentation) -> SparseMatrix {
    let mut m = SparseMatrix::new(p.n_generators);
    for w in &p.relators {
        m.push_row(w.iter().map(|&l| (l.unsigned_abs() as usize - 1, i64::from(l.signum()))));
    }
    m
}

pub fn abelianize(p: &Presentation) -> Result<AbelianGroupDesc> {
    let snf = linalg::sparse_smith_form(&exponent_sums(p));
    AbelianGroupDesc::from_smith(p.n_generators, &snf)
}
