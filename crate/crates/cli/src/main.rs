use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use mutviz::checks;
use mutviz::families::{self, LabeledGraph};
use mutviz::io::{emit_edge_list, emit_graph6, GraphDocument, GraphFormat};
use mutviz::realizability::enumerate_connected_graphs;
use mutviz::removal::{edge_scan, render_table, vertex_scan};
use mutviz::{
    is_realizable, max_visibility_set, Error, Graph, InvariantResult, SolverOptions, TotalCheck,
    VisibilityKind,
};

const SCHEMA: &str = "mutviz/1";

#[derive(Parser)]
#[command(name = "mutviz", version, about = "Exact mutual-visibility invariants of small graphs")]
struct Cli {
    /// Worker threads. More than one enables the parallel search.
    #[arg(long, global = true, env = "MUTVIZ_PARALLEL", value_name = "N")]
    parallel: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one or all four visibility numbers of a graph.
    Compute(ComputeArgs),
    /// Print a member of a named graph family.
    Family(FamilyArgs),
    /// Remove each edge in turn and check the general bounds.
    ScanEdges(ScanArgs),
    /// Remove each vertex in turn and check the general bounds.
    ScanVertices(ScanArgs),
    /// Decide whether some connected graph of order Q has value P.
    Realize(RealizeArgs),
    /// List connected graphs of order Q up to isomorphism, in graph6.
    Census(CensusArgs),
    /// Run the reproduction suite and print a pass/fail line per check.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    #[arg(long, short)]
    input: PathBuf,
    /// Input format. Defaults to graph6 for `.g6` files, edge list otherwise.
    #[arg(long, value_parser = parse_format)]
    format: Option<GraphFormat>,
}

#[derive(Args)]
struct ComputeArgs {
    /// mu, muo, mud, mut, or all.
    #[arg(long, default_value = "all")]
    kind: String,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    json: bool,
    /// Print a set attaining each value.
    #[arg(long)]
    witness: bool,
    /// Include solve times (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
    /// Search only for sets at least this large.
    #[arg(long)]
    lower_bound: Option<usize>,
    #[arg(long)]
    node_limit: Option<u64>,
    /// Check every pair for the total kind instead of distance-two pairs only.
    #[arg(long)]
    all_pairs: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    El,
    G6,
    Json,
}

#[derive(Args)]
struct FamilyArgs {
    /// One of Pn, Cn, Kn, Star, SubStar, Hk, Lk, Fk, J, CnL, CPlus, Broom.
    name: String,
    #[arg(long, short)]
    k: Option<usize>,
    #[arg(long, short)]
    n: Option<usize>,
    /// Leaf positions on the cycle for CnL, e.g. `3,5,7`.
    #[arg(long, value_delimiter = ',')]
    attach: Vec<usize>,
    #[arg(long, value_enum, default_value = "el")]
    emit: Emit,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: VisibilityKind,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RealizeArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: VisibilityKind,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    /// How to print the witness.
    #[arg(long, value_enum, default_value = "el")]
    emit: Emit,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    q: usize,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Include the 30-vertex dual solve and the order-7 census.
    #[arg(long)]
    long: bool,
    #[arg(long)]
    json: bool,
}

fn parse_kind(s: &str) -> Result<VisibilityKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

type Failure = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if let Some(Error::NodeLimit { best, .. }) = e.downcast_ref::<Error>() {
                eprintln!("error: {e}");
                eprintln!("best set found: {:?}", best.witness);
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let mut opts = SolverOptions::default();
    if let Some(threads) = cli.parallel {
        if threads == 0 {
            return Err("--parallel needs at least one thread".into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
        opts.parallel = threads > 1;
    }
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Compute(args) => compute(&mut out, args, opts)?,
        Command::Family(args) => {
            let g = families::by_name(&args.name, args.k, args.n, &args.attach)?;
            write_labeled(&mut out, &g, args.emit)?;
        }
        Command::ScanEdges(args) => scan(&mut out, args, opts, true)?,
        Command::ScanVertices(args) => scan(&mut out, args, opts, false)?,
        Command::Realize(args) => realize(&mut out, args)?,
        Command::Census(args) => census(&mut out, args)?,
        Command::VerifyPaper(args) => return verify(&mut out, args),
    }
    Ok(ExitCode::SUCCESS)
}

fn read_graph(args: &InputArgs) -> Result<Graph, Failure> {
    let text = if args.input == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&args.input)
            .map_err(|e| format!("cannot read {}: {e}", args.input.display()))?
    };
    let format = args.format.unwrap_or_else(|| {
        match args.input.extension().and_then(|e| e.to_str()) {
            Some("g6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    });
    Ok(GraphDocument::parse(&text, format)?.graph)
}

#[derive(Serialize)]
struct ResultJson<'a> {
    #[serde(flatten)]
    result: &'a InvariantResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

fn compute(out: &mut impl Write, args: ComputeArgs, mut opts: SolverOptions) -> Result<(), Failure> {
    let kinds: Vec<VisibilityKind> = match args.kind.as_str() {
        "all" => VisibilityKind::ALL.to_vec(),
        k => vec![parse_kind(k)?],
    };
    let g = read_graph(&args.input)?;
    opts.initial_lower_bound = args.lower_bound;
    opts.node_limit = args.node_limit;
    if args.all_pairs {
        opts.total_check = TotalCheck::AllPairs;
    }
    let results = kinds
        .iter()
        .map(|&k| max_visibility_set(&g, k, &opts))
        .collect::<Result<Vec<_>, _>>()?;
    if args.json {
        let results: Vec<_> = results
            .iter()
            .map(|r| ResultJson {
                result: r,
                elapsed_ms: args.timing.then_some(r.elapsed.as_secs_f64() * 1e3),
            })
            .collect();
        let doc = json!({
            "schema": SCHEMA,
            "graph": { "n": g.n(), "edges": g.edges().collect::<Vec<_>>() },
            "results": results,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        return Ok(());
    }
    let line: Vec<String> = results
        .iter()
        .map(|r| format!("{}={}", r.kind.short_name(), r.value))
        .collect();
    writeln!(out, "{}", line.join(" "))?;
    for r in &results {
        if args.witness {
            writeln!(out, "{} witness: {:?}", r.kind.short_name(), r.witness)?;
        }
        if args.timing {
            writeln!(
                out,
                "{} time: {:.3} ms, {} nodes",
                r.kind.short_name(),
                r.elapsed.as_secs_f64() * 1e3,
                r.nodes_explored
            )?;
        }
    }
    Ok(())
}

fn write_labeled(out: &mut impl Write, g: &LabeledGraph, emit: Emit) -> Result<(), Failure> {
    match emit {
        Emit::El => {
            writeln!(out, "# {} ({} vertices)", g.name(), g.n())?;
            writeln!(out, "# labels: {}", g.labels.join(" "))?;
            write!(out, "{}", emit_edge_list(&g.graph))?;
        }
        Emit::G6 => {
            if g.n() > mutviz::io::GRAPH6_MAX_ORDER {
                return Err(format!("graph6 output is limited to {} vertices", mutviz::io::GRAPH6_MAX_ORDER).into());
            }
            writeln!(out, "{}", emit_graph6(&g.graph))?;
        }
        Emit::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "name": g.name(),
                "n": g.n(),
                "vertices": g.named(g.graph.vertices()),
                "edges": g.graph.edges().collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}

fn scan(out: &mut impl Write, args: ScanArgs, opts: SolverOptions, edges: bool) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let report = if edges {
        edge_scan(&g, args.kind, &opts)?
    } else {
        vertex_scan(&g, args.kind, &opts)?
    };
    if args.json {
        let doc = json!({ "schema": SCHEMA, "report": report });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        write!(out, "{}", render_table(&report))?;
    }
    Ok(())
}

fn realize(out: &mut impl Write, args: RealizeArgs) -> Result<(), Failure> {
    let answer = is_realizable(args.kind, args.p, args.q)?;
    let Some(witness) = &answer.witness else {
        writeln!(
            out,
            "not realizable: no connected graph of order {} has {} = {}",
            args.q,
            args.kind.short_name(),
            args.p
        )?;
        return Ok(());
    };
    if let Emit::Json = args.emit {
        let doc = json!({
            "schema": SCHEMA,
            "answer": answer,
            "witness": {
                "name": witness.name(),
                "vertices": witness.named(witness.graph.vertices()),
                "edges": witness.graph.edges().collect::<Vec<_>>(),
            },
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        return Ok(());
    }
    writeln!(
        out,
        "realizable: {} has {} = {} and order {}",
        witness.name(),
        args.kind.short_name(),
        args.p,
        args.q
    )?;
    write_labeled(out, witness, args.emit)
}

fn census(out: &mut impl Write, args: CensusArgs) -> Result<(), Failure> {
    let graphs = enumerate_connected_graphs(args.q)?;
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&emit_graph6(g));
        text.push('\n');
    }
    match &args.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            writeln!(out, "wrote {} graphs of order {} to {}", graphs.len(), args.q, path.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn verify(out: &mut impl Write, args: VerifyArgs) -> Result<ExitCode, Failure> {
    let outcomes: Vec<_> = checks::criteria()
        .iter()
        .map(|c| {
            let o = c.run(args.long);
            if !args.json {
                let _ = print_outcome(out, &o);
            }
            o
        })
        .collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let ran = outcomes.iter().filter(|o| !o.skipped).count();
    if args.json {
        let doc = json!({ "schema": SCHEMA, "criteria": outcomes, "failed": failed });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        writeln!(out, "{} of {ran} checks passed", ran - failed)?;
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_outcome(out: &mut impl Write, o: &checks::Outcome) -> io::Result<()> {
    writeln!(out, "{o}")?;
    for n in &o.notes {
        writeln!(out, "      {n}")?;
    }
    for f in &o.failures {
        writeln!(out, "      FAILED: {f}")?;
    }
    out.flush()
}
