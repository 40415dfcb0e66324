use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use tokenpower_core::complexes::{build_ud_capped, build_x};
use tokenpower_core::exchanges::{enumerate_local_exchanges_in, tally};
use tokenpower_core::homology::h1_cellular;
use tokenpower_core::powers::{reduced_power_capped, token_graph_capped};
use tokenpower_core::{groups, Graph, PowerGraph, TwoComplex, DEFAULT_MAX_VERTICES};

use tokenpower::error::{exit, CliError, Result};
use tokenpower::fixtures::{self, Fixture};
use tokenpower::io::{self, ComplexJson, GroupJson, PowerJson, PowerTable, PresentationJson, Stats};
use tokenpower::report::Detail;
use tokenpower::suites::{self, Suite, SuiteParams};

/// Reduced graph powers, token graphs, their 2-complexes and homology.
///
/// Graphs travel between commands as edge lists on stdin/stdout.
#[derive(Parser, Debug)]
#[command(name = "tokenpower", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Refuse to build any power graph or complex with more vertices than this
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Seed for randomized fixtures
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print only the summary line
    #[arg(long, short, global = true, conflicts_with = "verbose")]
    quiet: bool,
    /// Also print notes and input details
    #[arg(long, short, global = true)]
    verbose: bool,
    /// Write output here instead of stdout
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    /// Read the input graph from this edge-list file ("-" for stdin)
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,
    /// Include wall-clock timings in reports (makes them nondeterministic)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a named graph as an edge list
    Gen {
        /// Family name followed by its parameters, e.g. `star 5` or `wedge 2 5`
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Subdivide edges until the graph is sufficiently subdivided for N tokens
        #[arg(long, value_name = "N")]
        subdivide_for: Option<usize>,
        /// Emit DOT instead of an edge list
        #[arg(long)]
        dot: bool,
    },
    /// Reduced power SP^n(G) of the input graph
    Power(PowerArgs),
    /// Token graph T_n(G) of the input graph
    Token(PowerArgs),
    /// 2-complex X(G) or the discrete configuration complex UD^n(G)
    Complex(ComplexArgs),
    /// Local exchanges of T_n(G), tallied by kind and support cycle
    Exchanges {
        #[arg(short, required = true)]
        n: usize,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct PowerArgs {
    /// Number of tokens
    #[arg(short, required = true)]
    n: usize,
    /// Print vertex and edge counts as JSON
    #[arg(long, group = "format")]
    stats: bool,
    /// Emit DOT with monomial labels
    #[arg(long, group = "format")]
    dot: bool,
    /// Emit JSON with the configuration table and edges
    #[arg(long, group = "format")]
    json: bool,
    /// With the default edge-list output, also write the configuration table here
    #[arg(long, value_name = "FILE")]
    sidecar: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["x", "ud"]))]
struct ComplexArgs {
    /// X(G): 2-cells on triangles and chordless 4-cycles
    #[arg(long)]
    x: bool,
    /// UD^N(G), cells of dimension <= 2
    #[arg(long, value_name = "N")]
    ud: Option<usize>,
    /// Print the first homology group
    #[arg(long, group = "what")]
    h1: bool,
    /// Print the edge-path presentation of the fundamental group
    #[arg(long, group = "what")]
    presentation: bool,
    /// Simplify the presentation by Tietze moves
    #[arg(long, requires = "presentation")]
    simplify: bool,
    /// Print the boundary matrices as triplets
    #[arg(long, group = "what")]
    triplets: bool,
    /// Structured output for --h1 and --presentation
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: Suite,
    /// Run on this named graph instead of the suite's fixture set
    #[arg(long, short, conflicts_with = "input")]
    graph: Option<String>,
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    m: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    /// Emit the JSON report
    #[arg(long)]
    json: bool,
}

fn read_input(global: &Global) -> Result<Graph> {
    io::read_graph(global.input.as_deref().unwrap_or(Path::new("-")))
}

fn emit(global: &Global, text: &str) -> Result<()> {
    io::write_output(global.out.as_deref(), text)
}

fn detail(global: &Global) -> Detail {
    if global.quiet {
        Detail::Summary
    } else if global.verbose {
        Detail::Everything
    } else {
        Detail::Checks
    }
}

fn cmd_gen(global: &Global, family: &[String], subdivide_for: Option<usize>, dot: bool) -> Result<()> {
    let mut g = fixtures::parse_named(&family.join(":"))?;
    if let Some(n) = subdivide_for {
        g = g.subdivide_for(n)?;
    }
    emit(global, &if dot { io::to_dot(&g, None) } else { io::write_edge_list(&g) })
}

fn cmd_power(global: &Global, args: &PowerArgs, token: bool) -> Result<()> {
    let g = read_input(global)?;
    let p: PowerGraph = if token {
        token_graph_capped(&g, args.n, global.max_vertices)?
    } else {
        reduced_power_capped(&g, args.n, global.max_vertices)?
    };
    let text = if args.stats {
        serde_json::to_string(&Stats::of(p.graph()))? + "\n"
    } else if args.dot {
        io::to_dot(p.graph(), Some(&io::config_labels(&p)))
    } else if args.json {
        serde_json::to_string_pretty(&PowerJson::new(&p))? + "\n"
    } else {
        if let Some(path) = &args.sidecar {
            std::fs::write(path, serde_json::to_string_pretty(&PowerTable::new(&p))? + "\n")?;
        }
        io::write_edge_list(p.graph())
    };
    emit(global, &text)
}

fn cmd_complex(global: &Global, args: &ComplexArgs) -> Result<()> {
    let g = read_input(global)?;
    let complex: TwoComplex = match args.ud {
        Some(n) => build_ud_capped(&g, n, global.max_vertices)?.complex,
        None => {
            if g.n_vertices() > global.max_vertices {
                return Err(tokenpower_core::Error::ResourceCap {
                    what: "vertices",
                    size: g.n_vertices() as u128,
                    cap: global.max_vertices,
                }
                .into());
            }
            build_x(&g)
        }
    };
    let text = if args.h1 {
        let h = h1_cellular(&complex)?;
        if args.json {
            serde_json::to_string(&GroupJson::from(&h))? + "\n"
        } else {
            format!("{h}\n")
        }
    } else if args.presentation {
        let mut p = groups::presentation_from_complex(&complex)?;
        if args.simplify {
            p = groups::tietze_simplify(&p, p.n_generators);
        }
        if args.json {
            serde_json::to_string(&PresentationJson::from(&p))? + "\n"
        } else {
            format!("{p}\n")
        }
    } else if args.triplets {
        format!(
            "# boundary 1: edges -> vertices\n{}# boundary 2: faces -> edges\n{}",
            io::write_triplets(&complex.edge_boundaries()),
            io::write_triplets(&complex.face_boundaries())
        )
    } else {
        serde_json::to_string(&ComplexJson::from(&complex))? + "\n"
    };
    emit(global, &text)
}

fn cmd_exchanges(global: &Global, n: usize, csv: bool, as_json: bool) -> Result<()> {
    let g = read_input(global)?;
    let tok = token_graph_capped(&g, n, global.max_vertices)?;
    let found = enumerate_local_exchanges_in(&tok)?;
    let mut per_support: std::collections::BTreeMap<(Vec<usize>, &str), usize> = Default::default();
    for e in &found {
        *per_support.entry((e.support.clone(), e.kind.label())).or_insert(0) += 1;
    }
    let text = if csv {
        let mut s = String::from("support,kind,count\n");
        for ((support, kind), count) in &per_support {
            let walk: Vec<String> = support.iter().map(ToString::to_string).collect();
            s += &format!("{},{kind},{count}\n", walk.join("-"));
        }
        s
    } else if as_json {
        let rows: Vec<_> = per_support
            .iter()
            .map(|((support, kind), count)| json!({ "support": support, "kind": kind, "count": count }))
            .collect();
        let kinds: std::collections::BTreeMap<&str, usize> =
            tally(&found).into_iter().map(|(k, c)| (k.label(), c)).collect();
        serde_json::to_string_pretty(&json!({ "n": n, "total": found.len(), "kinds": kinds, "supports": rows }))? + "\n"
    } else {
        let mut s = String::new();
        for (k, c) in tally(&found) {
            s += &format!("{k}\t{c}\n");
        }
        s + &format!("total\t{}\n", found.len())
    };
    emit(global, &text)
}

fn cmd_verify(global: &Global, args: &VerifyArgs, command: Vec<String>) -> Result<bool> {
    let graph = match (&args.graph, &global.input) {
        (Some(name), _) => Some(Fixture::named(name)?),
        (None, Some(path)) => Some(Fixture::new(path.display().to_string(), io::read_graph(path)?)),
        (None, None) => None,
    };
    let params = SuiteParams {
        graph,
        n: args.n,
        m: args.m,
        max_n: args.max_n,
        seed: global.seed,
        cap: global.max_vertices,
        timings: global.timings,
    };
    let report = suites::run(args.suite, &params, command)?;
    let text = if args.json {
        report.to_json()
    } else {
        report.to_text(detail(global))
    };
    emit(global, &text)?;
    Ok(report.passed)
}

fn run(cli: &Cli, command: Vec<String>) -> Result<bool> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen { family, subdivide_for, dot } => cmd_gen(g, family, *subdivide_for, *dot)?,
        Command::Power(a) => cmd_power(g, a, false)?,
        Command::Token(a) => cmd_power(g, a, true)?,
        Command::Complex(a) => cmd_complex(g, a)?,
        Command::Exchanges { n, csv, json } => cmd_exchanges(g, *n, *csv, *json)?,
        Command::Verify(a) => return cmd_verify(g, a, command),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, command) {
        Ok(true) => ExitCode::from(exit::PASS),
        Ok(false) => ExitCode::from(exit::CHECK_FAILED),
        Err(e) => {
            if !matches!(&e, CliError::Io(io) if io.kind() == std::io::ErrorKind::BrokenPipe) {
                eprintln!("tokenpower: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
