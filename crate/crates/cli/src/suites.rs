//! Named verification suites.
//!
//! Each suite either sweeps its built-in fixture set or, when the caller
//! supplies a graph, runs the same checks on that one graph. In a sweep a
//! fixture that exceeds the vertex cap is skipped with a note; a single
//! user graph over the cap is an error.

use std::collections::BTreeSet;

use serde_json::{json, Value};
use tokenpower_core::comb::binomial;
use tokenpower_core::complexes::{build_x, verify_skeleton_iso};
use tokenpower_core::exchanges::{
    count_local_exchanges, enumerate_local_exchanges_in, rank_formula, tally, verify_star_conjecture,
    RankFormula,
};
use tokenpower_core::homology::{
    cubical_boundary_squares_to_zero, cubical_h1_with, h1_cellular, verify_hombasis_in, CubicalSign,
    DEFAULT_CUBE_CAP,
};
use tokenpower_core::powers::{
    complement_iso, path_iso, reduced_power_capped, sp_complement_claim, star_iso, token_graph_capped,
    ClaimStatus, IsoReport,
};
use tokenpower_core::{groups, AbelianGroupDesc, Error as CoreError, Family, Graph, TokenConfig};

use crate::error::{CliError, Result};
use crate::fixtures::{self, Fixture};
use crate::report::{CapPolicy, GraphInput, Inputs, Outcome, Recorder, Report, Values};

type CoreResult<T> = std::result::Result<T, CoreError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    /// H1 of X(SP^n(G)) equals H1 of X(G)
    #[value(name = "theorem1")]
    PowerInvariance,
    /// T_n(G) and X(T_n(G)) against the low skeleta of UD^n(G)
    Skeleton,
    /// fundamental cycles plus Cartesian squares span the cycle lattice of SP^n(G)
    Hombasis,
    /// H1 of X(T_n(S_m)) is free of the conjectured rank
    StarConj,
    /// enumerated local exchanges against the closed-form count
    Exchanges,
    /// explicit isomorphisms for powers of paths
    PathIso,
    /// explicit isomorphisms for powers of stars
    StarIso,
    /// cubical H1 against cellular H1, and boundary-of-boundary checks
    OracleH1,
    /// H1 of a box product against the direct sum
    ProductH1,
    /// token complement T_n = T_{t-n}
    Complement,
    /// H1 of X(SP^n) vanishes for paths and stars
    Triviality,
    /// agreement between the closed-form rank formulas and computed ranks
    Formulas,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::PowerInvariance => "theorem1",
            Suite::Skeleton => "skeleton",
            Suite::Hombasis => "hombasis",
            Suite::StarConj => "star-conj",
            Suite::Exchanges => "exchanges",
            Suite::PathIso => "path-iso",
            Suite::StarIso => "star-iso",
            Suite::OracleH1 => "oracle-h1",
            Suite::ProductH1 => "product-h1",
            Suite::Complement => "complement",
            Suite::Triviality => "triviality",
            Suite::Formulas => "formulas",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub graph: Option<Fixture>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub max_n: Option<usize>,
    pub seed: u64,
    pub cap: usize,
    pub timings: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            graph: None,
            n: None,
            m: None,
            max_n: None,
            seed: 0,
            cap: tokenpower_core::DEFAULT_MAX_VERTICES,
            timings: false,
        }
    }
}

impl SuiteParams {
    fn inputs(&self, fixtures: &str) -> Inputs {
        let mut params = Values::new();
        params.insert("max_vertices".into(), json!(self.cap));
        params.insert("seed".into(), json!(self.seed));
        for (k, v) in [("n", self.n), ("m", self.m), ("max_n", self.max_n)] {
            if let Some(v) = v {
                params.insert(k.into(), json!(v));
            }
        }
        Inputs {
            graph: self.graph.as_ref().map(|f| GraphInput::new(&f.name, &f.graph)),
            fixtures: self.graph.is_none().then(|| fixtures.to_owned()),
            params,
        }
    }

    fn recorder(&self, suite: Suite, command: Vec<String>, fixtures: &str) -> Recorder {
        let policy = if self.graph.is_some() {
            CapPolicy::Fail
        } else {
            CapPolicy::Skip
        };
        Recorder::new(suite.name(), command, self.inputs(fixtures), self.timings, policy)
    }

    fn ns_or(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }
}

/// Runs `suite` and returns its report. `command` is echoed into the report.
pub fn run(suite: Suite, params: &SuiteParams, command: Vec<String>) -> Result<Report> {
    match suite {
        Suite::PowerInvariance => power_invariance(params, command),
        Suite::Skeleton => skeleton(params, command),
        Suite::Hombasis => hombasis(params, command),
        Suite::StarConj => star_conj(params, command),
        Suite::Exchanges => exchanges(params, command),
        Suite::PathIso => path_isos(params, command),
        Suite::StarIso => star_isos(params, command),
        Suite::OracleH1 => oracle_h1(params, command),
        Suite::ProductH1 => product_h1(params, command),
        Suite::Complement => complement(params, command),
        Suite::Triviality => triviality(params, command),
        Suite::Formulas => formulas(params, command),
    }
}

fn group_json(a: &AbelianGroupDesc) -> Value {
    json!({ "rank": a.rank, "torsion": a.torsion, "text": a.to_string() })
}

fn require_connected(f: &Fixture) -> Result<()> {
    if f.graph.is_connected() && f.graph.n_vertices() > 0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{} must be a nonempty connected graph", f.name)))
    }
}

fn size_guard(what: &'static str, size: Option<u128>, cap: usize) -> CoreResult<()> {
    match size {
        Some(s) if s <= cap as u128 => Ok(()),
        other => Err(CoreError::ResourceCap {
            what,
            size: other.unwrap_or(u128::MAX),
            cap,
        }),
    }
}

fn small_connected(max_t: usize) -> Vec<Fixture> {
    fixtures::connected_graphs_up_to(max_t)
        .into_iter()
        .enumerate()
        .map(|(i, g)| Fixture::new(format!("connected{}#{i}", g.n_vertices()), g))
        .collect()
}

// ---------------------------------------------------------------- power invariance

fn power_invariance_checks(rec: &mut Recorder, f: &Fixture, ns: &[usize], cap: usize) -> Result<()> {
    let base = build_x(&f.graph);
    let base_h1 = h1_cellular(&base)?;
    rec.check(format!("{}: presentation abelianizes to H1", f.name), || {
        let p = groups::presentation_from_complex(&base)?;
        let ab = groups::abelianize(&p)?;
        let simplified = groups::abelianize(&groups::tietze_simplify(&p, p.n_generators))?;
        Ok(Outcome::new(ab == base_h1 && simplified == base_h1)
            .with("h1", group_json(&base_h1))
            .with("abelianization", group_json(&ab)))
    })?;
    for &n in ns {
        rec.check(format!("{} n={n}: H1(X(SP^n)) = H1(X(G))", f.name), || {
            let p = reduced_power_capped(&f.graph, n, cap)?;
            let x = build_x(p.graph());
            let h = h1_cellular(&x)?;
            Ok(Outcome::new(h == base_h1 && x.boundary_squares_to_zero())
                .with("base", group_json(&base_h1))
                .with("power", group_json(&h))
                .with("power_vertices", p.n_vertices())
                .with("boundary_squares_to_zero", x.boundary_squares_to_zero()))
        })?;
    }
    Ok(())
}

fn power_invariance(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::PowerInvariance, command, "connected graphs on <= 7 vertices, klein:5");
    let ns = p.ns_or(&[2, 3]);
    if let Some(f) = &p.graph {
        require_connected(f)?;
        power_invariance_checks(&mut rec, f, &ns, p.cap)?;
    } else {
        for f in &small_connected(7) {
            power_invariance_checks(&mut rec, f, &ns, p.cap)?;
        }
        let klein = Fixture::named("klein:5")?;
        let klein_ns = if p.n.is_some() { ns.clone() } else { vec![2] };
        power_invariance_checks(&mut rec, &klein, &klein_ns, p.cap)?;
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- skeleton

/// Which clauses a skeleton check must establish.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Clauses {
    Both,
    FirstOnly,
    Applicable,
}

fn skeleton_check(rec: &mut Recorder, f: &Fixture, n: usize, want: Clauses, cap: usize) -> Result<()> {
    rec.check(format!("{} n={n}", f.name), || {
        let t = f.graph.n_vertices() as u64;
        size_guard("token configurations", binomial(t, n as u64), cap)?;
        let r = verify_skeleton_iso(&f.graph, n)?;
        let passed = match want {
            Clauses::Both => r.sk1 && r.sk2 == Some(true),
            Clauses::FirstOnly => r.sk1 && r.sk2.is_none(),
            Clauses::Applicable => r.passed(),
        };
        Ok(Outcome::new(passed)
            .with("sk1", r.sk1)
            .with("sk2", r.sk2.map_or(Value::Null, Value::Bool))
            .with("details", r.details))
    })
}

fn skeleton(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::Skeleton, command, "cycle:6, subdivided wedge:2:5, path:6, cycle:4, complete:4");
    if let Some(f) = &p.graph {
        for n in p.ns_or(&[2, 3]) {
            skeleton_check(&mut rec, f, n, Clauses::Applicable, p.cap)?;
        }
    } else {
        let wedge = Graph::generate(Family::WedgeCycles { k: 2, m: 5 })?.subdivide_for(3)?;
        let wedge = Fixture::new("wedge:2:5 subdivided for n=3", wedge);
        let plan = [
            (Fixture::named("cycle:6")?, vec![2, 3], Clauses::Both),
            (wedge, vec![3], Clauses::Both),
            (Fixture::named("path:6")?, vec![2, 3], Clauses::Both),
            (Fixture::named("cycle:4")?, vec![2, 3], Clauses::FirstOnly),
            (Fixture::named("complete:4")?, vec![2, 3], Clauses::FirstOnly),
        ];
        for (f, ns, want) in &plan {
            for &n in ns {
                skeleton_check(&mut rec, f, n, *want, p.cap)?;
            }
        }
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- hombasis

fn hombasis_check(rec: &mut Recorder, f: &Fixture, n: usize, cap: usize) -> Result<()> {
    rec.check(format!("{} n={n}", f.name), || {
        let power = reduced_power_capped(&f.graph, n, cap)?;
        let x = TokenConfig::new(vec![0; n - 1]);
        let r = verify_hombasis_in(&power, &x)?;
        Ok(Outcome::new(r.passed())
            .with("background", x.to_string())
            .with("power_vertices", r.power_vertices)
            .with("power_edges", r.power_edges)
            .with("cycle_rank", r.cycle_rank)
            .with("fundamental_cycles", r.fundamental_cycles)
            .with("cartesian_squares", r.squares)
            .with("span_rank", r.span_rank)
            .with("unimodular", r.unimodular)
            .with("phi_consistent", r.phi_consistent))
    })
}

fn hombasis(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::Hombasis, command, "cycle:5, wedge:2:5, complete:3");
    if let Some(f) = &p.graph {
        require_connected(f)?;
        for n in p.ns_or(&[2]) {
            if n < 2 {
                return Err(CliError::Usage("hombasis needs n >= 2".into()));
            }
            hombasis_check(&mut rec, f, n, p.cap)?;
        }
    } else {
        for (name, n) in [("cycle:5", 2), ("cycle:5", 3), ("wedge:2:5", 2), ("complete:3", 2), ("complete:3", 3)] {
            hombasis_check(&mut rec, &Fixture::named(name)?, n, p.cap)?;
        }
        rec.check("cycle:5 n=2: cycle rank 11 = 1 fundamental cycle + 10 squares", || {
            let c5 = Graph::generate(Family::Cycle(5))?;
            let r = verify_hombasis_in(&reduced_power_capped(&c5, 2, p.cap)?, &TokenConfig::new(vec![0]))?;
            Ok(Outcome::new(r.cycle_rank == 11 && r.fundamental_cycles == 1 && r.squares == 10)
                .with("cycle_rank", r.cycle_rank)
                .with("fundamental_cycles", r.fundamental_cycles)
                .with("cartesian_squares", r.squares))
        })?;
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- star-conj

fn star_conj_check(rec: &mut Recorder, m: usize, n: usize, cap: usize) -> Result<()> {
    rec.check(format!("star:{m} n={n}"), || {
        size_guard("token configurations", binomial(m as u64 + 1, n as u64), cap)?;
        let r = verify_star_conjecture(m, n)?;
        Ok(Outcome::new(r.passed())
            .with("predicted_rank", r.predicted as i64)
            .with("h1", group_json(&r.computed)))
    })
}

fn star_conj(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    if p.graph.is_some() {
        return Err(CliError::Usage("star-conj takes -m/-n/--max-n, not a graph".into()));
    }
    let mut rec = p.recorder(Suite::StarConj, command, "stars");
    let max_n = p.max_n.unwrap_or(4);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    match (p.m, p.n) {
        (Some(m), Some(n)) => pairs.push((m, n)),
        (Some(m), None) => {
            for mm in 2..=m {
                pairs.extend((2..=max_n.min(mm)).map(|n| (mm, n)));
            }
        }
        (None, n) => {
            for mm in 2..=6 {
                pairs.extend((2..=max_n.min(mm)).filter(|&k| n.is_none_or(|n| n == k)).map(|k| (mm, k)));
            }
            pairs.extend([(8, 2), (8, 3)].into_iter().filter(|&(_, k)| n.is_none_or(|n| n == k)));
        }
    }
    for (m, n) in pairs {
        if n < 1 || n > m {
            return Err(CliError::Usage(format!("star-conj needs 1 <= n <= m, got m={m}, n={n}")));
        }
        star_conj_check(&mut rec, m, n, p.cap)?;
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- exchanges

fn exchange_check(rec: &mut Recorder, f: &Fixture, n: usize, expected: Option<usize>, cap: usize) -> Result<()> {
    rec.check(format!("{} n={n}", f.name), || {
        let g = &f.graph;
        let tok = token_graph_capped(g, n, cap)?;
        let found = enumerate_local_exchanges_in(&tok)?;
        let (triangles, squares) = (g.triangles().len(), g.chordless_4cycles().len());
        let formula = count_local_exchanges(g.n_vertices(), n, triangles, squares).ok();
        let kinds: Values = tally(&found)
            .into_iter()
            .map(|(k, c)| (k.label().to_owned(), json!(c)))
            .collect();
        let passed = formula.is_none_or(|c| c == found.len() as i128)
            && expected.is_none_or(|e| e == found.len());
        let mut o = Outcome::new(passed)
            .with("enumerated", found.len())
            .with("formula", formula.map_or(Value::Null, |c| json!(c as i64)))
            .with("triangles", triangles)
            .with("chordless_4cycles", squares)
            .with("kinds", Value::Object(kinds.into_iter().collect()));
        if formula.is_none() {
            o = o.with("range", "out of stated range");
        }
        if let Some(e) = expected {
            o = o.with("expected", e);
        }
        Ok(o)
    })
}

fn exchanges(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::Exchanges, command, "tail:3:5, tail:4:4, seeded random graphs");
    if let Some(f) = &p.graph {
        for n in p.ns_or(&[3]) {
            exchange_check(&mut rec, f, n, None, p.cap)?;
        }
        if fixtures::has_chorded_square(&f.graph) {
            rec.note("the graph has a chorded 4-cycle; its token graphs contain 4-cycles that are neither squares nor exchanges");
        }
    } else {
        let n = p.n.unwrap_or(3);
        for (i, f) in fixtures::exchange_fixtures(p.seed, 5).iter().enumerate() {
            let expected = match (i, n) {
                (0, 3) => Some(15),
                (1, 3) => Some(23),
                _ => None,
            };
            exchange_check(&mut rec, f, n, expected, p.cap)?;
        }
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- iso suites

fn iso_outcome(r: &IsoReport) -> Outcome {
    let list: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "iso": c.name, "vertices": c.vertices, "edges": c.edges }))
        .collect();
    Outcome::new(true).with("isomorphisms", list)
}

fn grid(p: &SuiteParams, upto: usize, triangular: bool) -> Vec<(usize, usize)> {
    let ms: Vec<usize> = p.m.map_or_else(|| (1..=upto).collect(), |m| vec![m]);
    let ns: Vec<usize> = p.n.map_or_else(|| (1..=upto).collect(), |n| vec![n]);
    ms.iter()
        .flat_map(|&m| ns.iter().map(move |&n| (m, n)))
        .filter(|&(m, n)| !triangular || p.n.is_some() && p.m.is_some() || n <= m)
        .collect()
}

fn path_isos(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::PathIso, command, "1 <= m, n <= 5");
    for (m, n) in grid(p, 5, false) {
        rec.check(format!("path m={m} n={n}"), || {
            size_guard("configurations", binomial((m + n) as u64, n as u64), p.cap)?;
            Ok(iso_outcome(&path_iso(m, n)?))
        })?;
    }
    Ok(rec.finish())
}

fn star_isos(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::StarIso, command, "1 <= n <= m <= 5");
    for (m, n) in grid(p, 5, true) {
        rec.check(format!("star m={m} n={n}"), || {
            size_guard("configurations", binomial((m + n) as u64, n as u64), p.cap)?;
            Ok(iso_outcome(&star_iso(m, n)?))
        })?;
        if n <= m {
            rec.check(format!("star m={m} n={n}: token degrees"), || {
                let tok = token_graph_capped(&Graph::generate(Family::Star(m))?, n, p.cap)?;
                let found: BTreeSet<usize> = tok.graph().degree_sequence().into_iter().collect();
                let want: BTreeSet<usize> = [n, m - n + 1].into_iter().collect();
                Ok(Outcome::new(found == want)
                    .with("degrees", found.into_iter().collect::<Vec<_>>())
                    .with("expected", want.into_iter().collect::<Vec<_>>()))
            })?;
        }
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- oracle-h1

fn oracle_check(rec: &mut Recorder, f: &Fixture) -> Result<()> {
    rec.check(f.name.clone(), || {
        let x = build_x(&f.graph);
        let cellular = h1_cellular(&x)?;
        let cubical = cubical_h1_with(&f.graph, CubicalSign::Alternating, DEFAULT_CUBE_CAP)?;
        let x_dd = x.boundary_squares_to_zero();
        let cube_dd = cubical_boundary_squares_to_zero(&f.graph, CubicalSign::Alternating)?;
        Ok(Outcome::new(cellular == cubical && x_dd && cube_dd)
            .with("cellular", group_json(&cellular))
            .with("cubical", group_json(&cubical))
            .with("cellular_boundary_squares_to_zero", x_dd)
            .with("cubical_boundary_squares_to_zero", cube_dd))
    })
}

fn oracle_h1(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::OracleH1, command, "connected graphs on <= 6 vertices");
    if let Some(f) = &p.graph {
        require_connected(f)?;
        oracle_check(&mut rec, f)?;
    } else {
        for f in &small_connected(6) {
            oracle_check(&mut rec, f)?;
        }
    }
    rec.check("constant-sign square boundary is rejected on cycle:4", || {
        let c4 = Graph::generate(Family::Cycle(4))?;
        let constant = cubical_boundary_squares_to_zero(&c4, CubicalSign::Constant)?;
        Ok(Outcome::new(!constant).with("constant_sign_boundary_squares_to_zero", constant))
    })?;
    Ok(rec.finish())
}

// ---------------------------------------------------------------- product-h1

fn product_check(rec: &mut Recorder, a: &Fixture, b: &Fixture, cap: usize) -> Result<()> {
    rec.check(format!("{} x {}", a.name, b.name), || {
        let size = a.graph.n_vertices() as u128 * b.graph.n_vertices() as u128;
        size_guard("product vertices", Some(size), cap)?;
        let ha = h1_cellular(&build_x(&a.graph))?;
        let hb = h1_cellular(&build_x(&b.graph))?;
        let hp = h1_cellular(&build_x(&a.graph.box_product(&b.graph)))?;
        let sum = ha.direct_sum(&hb)?;
        Ok(Outcome::new(hp == sum)
            .with("left", group_json(&ha))
            .with("right", group_json(&hb))
            .with("product", group_json(&hp)))
    })
}

fn product_h1(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::ProductH1, command, "fixed product pairs");
    if let Some(f) = &p.graph {
        require_connected(f)?;
        for other in ["path:1", "cycle:5"] {
            product_check(&mut rec, f, &Fixture::named(other)?, p.cap)?;
        }
    } else {
        for (a, b) in &fixtures::product_pairs() {
            product_check(&mut rec, a, b, p.cap)?;
        }
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- complement

fn complement_check(rec: &mut Recorder, f: &Fixture, ns: &[usize], cap: usize) -> Result<()> {
    let t = f.graph.n_vertices();
    for &n in ns.iter().filter(|&&n| n <= t) {
        rec.check(format!("{} n={n}: T_n = T_(t-n)", f.name), || {
            let tok = token_graph_capped(&f.graph, n, cap)?;
            size_guard("token configurations", binomial(t as u64, (t - n) as u64), cap)?;
            let iso = complement_iso(&tok)?;
            Ok(Outcome::new(true)
                .with("vertices", tok.n_vertices())
                .with("edges", tok.graph().n_edges())
                .with("target_n", iso.target.n()))
        })?;
    }
    Ok(())
}

fn sp_claim_notes(rec: &mut Recorder) -> Result<()> {
    for (name, n) in [("complete:2", 1), ("complete:2", 2), ("complete:3", 2), ("path:2", 2), ("cycle:4", 2)] {
        let g = fixtures::parse_named(name)?;
        let t = g.n_vertices();
        let status = match sp_complement_claim(&g, n)? {
            ClaimStatus::Refuted(why) => format!("refuted ({why})"),
            ClaimStatus::InvariantsAgree => "invariants agree".to_owned(),
        };
        rec.note(format!("SP^{n} vs SP^{} on {name}: {status}", t - n + 1));
    }
    Ok(())
}

fn complement(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::Complement, command, "ten fixed graphs");
    if let Some(f) = &p.graph {
        let t = f.graph.n_vertices();
        complement_check(&mut rec, f, &p.ns_or(&(0..=t).collect::<Vec<_>>()), p.cap)?;
    } else {
        for f in &fixtures::complement_fixtures() {
            let t = f.graph.n_vertices();
            complement_check(&mut rec, f, &p.ns_or(&(0..=t).collect::<Vec<_>>()), p.cap)?;
        }
    }
    sp_claim_notes(&mut rec)?;
    Ok(rec.finish())
}

// ---------------------------------------------------------------- triviality

fn triviality(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    let mut rec = p.recorder(Suite::Triviality, command, "paths and stars, m, n <= 4");
    let mut plan: Vec<(Fixture, usize)> = Vec::new();
    if let Some(f) = &p.graph {
        require_connected(f)?;
        plan.extend(p.ns_or(&[1, 2, 3, 4]).into_iter().map(|n| (f.clone(), n)));
    } else {
        for m in 1..=4 {
            for n in p.ns_or(&[1, 2, 3, 4]) {
                plan.push((Fixture::named(&format!("path:{m}"))?, n));
                plan.push((Fixture::named(&format!("star:{m}"))?, n));
            }
        }
    }
    for (f, n) in &plan {
        rec.check(format!("{} n={n}", f.name), || {
            let power = reduced_power_capped(&f.graph, *n, p.cap)?;
            let h = h1_cellular(&build_x(power.graph()))?;
            Ok(Outcome::new(h.is_trivial()).with("h1", group_json(&h)))
        })?;
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------- formulas

/// Abelianization rank expected for the reconstructed two-pentagon graph.
pub fn twin_pentagons_rank(n: usize) -> usize {
    match n {
        1..=4 => n + 1,
        5 => 5,
        _ => 11 - n,
    }
}

fn formulas(p: &SuiteParams, command: Vec<String>) -> Result<Report> {
    if p.graph.is_some() {
        return Err(CliError::Usage("formulas runs on built-in graphs only".into()));
    }
    let mut rec = p.recorder(Suite::Formulas, command, "closed forms, wedge:k:5, twin-pentagons");
    rec.check("star closed forms agree at n=2 for 2 <= m <= 50", || {
        let bad: Vec<usize> = (2..=50)
            .filter(|&m| {
                rank_formula(RankFormula::StarToken { m, n: 2 }).ok()
                    != rank_formula(RankFormula::StarBraid { m, n: 2 }).ok()
            })
            .collect();
        Ok(Outcome::new(bad.is_empty()).with("disagreeing_m", bad))
    })?;
    rec.check("wedge closed forms agree at n=2 for 2 <= k <= 50", || {
        let bad: Vec<usize> = (2..=50)
            .filter(|&k| {
                rank_formula(RankFormula::WedgeBraid { k }).ok()
                    != rank_formula(RankFormula::WedgeConfigHomology { k, n: 2 }).ok()
            })
            .collect();
        Ok(Outcome::new(bad.is_empty()).with("disagreeing_k", bad))
    })?;
    for k in [2, 3] {
        rec.check(format!("wedge:{k}:5 n=2: H1(X(T_2)) free of rank 3 C(k,2) + 1"), || {
            let g = Graph::generate(Family::WedgeCycles { k, m: 5 })?;
            let tok = token_graph_capped(&g, 2, p.cap)?;
            let h = h1_cellular(&build_x(tok.graph()))?;
            let want = rank_formula(RankFormula::WedgeBraid { k })?;
            Ok(Outcome::new(h.is_free() && h.rank as i128 == want)
                .with("h1", group_json(&h))
                .with("predicted_rank", want as i64))
        })?;
    }
    let pentagons = fixtures::twin_pentagons();
    for n in 1..=9 {
        rec.check(format!("twin-pentagons n={n}: rank of H1(X(T_n))"), || {
            let tok = token_graph_capped(&pentagons, n, p.cap)?;
            let h = h1_cellular(&build_x(tok.graph()))?;
            let want = twin_pentagons_rank(n);
            Ok(Outcome::new(h.rank == want).with("h1", group_json(&h)).with("expected_rank", want))
        })?;
    }
    rec.note("twin-pentagons is a reconstruction: two pentagons joined by edges 0-5 and 1-5");
    Ok(rec.finish())
}
