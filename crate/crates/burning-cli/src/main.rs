//! Command-line front end for the burning toolkit.
//!
//! Exit codes: 0 on success, 1 on an invalid result or runtime failure,
//! 2 on a usage error. Thread count for the parallel paths follows
//! `RAYON_NUM_THREADS`.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use burning::bench::{emit_report, load_manifest, run_benchmark, ReportFormat};
use burning::distance::apsp;
use burning::exact::{burning_number_exact, ExactLimits};
use burning::generate;
use burning::graph::Graph;
use burning::io::{load_graph, to_edge_list, FileFormat};
use burning::sequence::{covered_set, verify, BurningSequence};
use burning::solver::{bgp, bgp_plus, greedy_known_b, TieBreak};

#[derive(Parser)]
#[command(
    name = "burning",
    version,
    about = "Graph burning: approximation solvers, verification, exact search, benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an approximation solver and print the burning sequence
    Solve(SolveArgs),
    /// Check whether a sequence burns a graph
    Verify(VerifyArgs),
    /// Compute the exact burning number of a small graph
    Exact(ExactArgs),
    /// Run a benchmark manifest and emit a comparison report
    Bench(BenchArgs),
    /// Generate a synthetic graph as a canonical edge list
    Gen(GenArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file to read (.mtx is matrix market, anything else edge list)
    #[arg(long, value_name = "PATH", conflicts_with = "gen", required_unless_present = "gen")]
    input: Option<PathBuf>,
    /// Force the input format instead of going by extension
    #[arg(long, value_enum, requires = "input")]
    format: Option<Format>,
    /// Generate the graph instead of reading one: path:49, grid2:33x33,
    /// grid3:10x10x10, ba:1000,2[,seed], gnp:50,0.1[,seed], tight-example
    #[arg(long, value_name = "SPEC")]
    gen: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Mtx,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Bgp,
    #[value(name = "bgp+", alias = "bgp_plus")]
    BgpPlus,
    Alg1,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Solver to run
    #[arg(long, value_enum, default_value = "bgp+")]
    algo: Algo,
    /// Start vertex (label or id); ignored by bgp+, default 0 otherwise
    #[arg(long)]
    start: Option<String>,
    /// Tie-break policy: lowest, random, or pref:v1,v2,...
    #[arg(long, default_value = "lowest")]
    tiebreak: String,
    /// Known burning number, required by alg1
    #[arg(long)]
    k: Option<u32>,
    /// Seed for seeded generators and the random tie-break
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated sequence of labels or ids
    #[arg(long)]
    seq: String,
    /// Seed for seeded generators
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Vertex-count limit; raise to search larger graphs (hard cap 64)
    #[arg(long, default_value_t = 20)]
    max_n: usize,
    /// Longest sequence length to try
    #[arg(long, default_value_t = 64)]
    max_k: usize,
    /// Search-node budget across all feasibility checks
    #[arg(long, default_value_t = ExactLimits::default().node_budget)]
    budget: u64,
    /// Seed for seeded generators
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Benchmark manifest (toml)
    #[arg(long, value_name = "PATH")]
    manifest: PathBuf,
    /// Report format
    #[arg(long, value_enum, default_value = "table")]
    out: OutFormat,
    /// Write the report here instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct GenArgs {
    /// Generator spec, same forms as --gen
    spec: String,
    /// Seed for seeded generators
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the edge list here instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self, seed: u64) -> Result<Graph> {
        if let Some(spec) = &self.gen {
            return Ok(generate::from_spec(spec, seed)?);
        }
        let path = self.input.as_ref().expect("clap enforces one source");
        let format = self.format.map(|f| match f {
            Format::Edgelist => FileFormat::EdgeList,
            Format::Mtx => FileFormat::MatrixMarket,
        });
        let parsed = load_graph(path, format)?;
        if parsed.self_loops_dropped > 0 || parsed.duplicates_dropped > 0 {
            eprintln!(
                "note: dropped {} self-loop(s) and {} duplicate edge(s)",
                parsed.self_loops_dropped, parsed.duplicates_dropped
            );
        }
        Ok(parsed.graph)
    }
}

/// Resolves a vertex given as a label or a numeric id.
fn resolve_vertex(token: &str, g: &Graph) -> Result<usize> {
    let token = token.trim();
    if let Some(v) = g.vertex_by_label(token) {
        return Ok(v);
    }
    let v: usize = token
        .parse()
        .with_context(|| format!("unknown vertex {token:?}"))?;
    if v >= g.n() {
        bail!("vertex {v} out of range for a graph on {} vertices", g.n());
    }
    Ok(v)
}

fn parse_tiebreak(text: &str, seed: u64, g: &Graph) -> Result<TieBreak> {
    match text {
        "lowest" => Ok(TieBreak::LowestId),
        "random" => Ok(TieBreak::SeededRandom(seed)),
        other => match other.strip_prefix("pref:") {
            Some(body) => {
                let list = body
                    .split(',')
                    .map(|t| resolve_vertex(t, g))
                    .collect::<Result<Vec<_>>>()?;
                Ok(TieBreak::Preference(list))
            }
            None => bail!("unknown tie-break {text:?}; expected lowest, random, or pref:v1,v2,..."),
        },
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<ExitCode> {
    let g = args.input.load(args.seed)?;
    let dm = apsp(&g);
    let tiebreak = parse_tiebreak(&args.tiebreak, args.seed, &g)?;
    let start = match &args.start {
        Some(token) => Some(resolve_vertex(token, &g)?),
        None => None,
    };
    let (sequence, start, valid) = match args.algo {
        Algo::Bgp => {
            let r = bgp(&g, &dm, start.unwrap_or(0), &tiebreak)?;
            (r.sequence, r.start_vertex, r.valid)
        }
        Algo::BgpPlus => {
            let r = bgp_plus(&g, &dm, &tiebreak)?;
            (r.sequence, r.start_vertex, r.valid)
        }
        Algo::Alg1 => {
            let k = match args.k {
                Some(k) => k,
                None => bail!("alg1 needs --k, the burning number to assume"),
            };
            let start = start.unwrap_or(0);
            let s = greedy_known_b(&dm, k, start, &tiebreak)?;
            let valid = verify(&s, &dm)?;
            (s, start, valid)
        }
    };
    println!("sequence: {}", sequence.display(&g));
    println!("length: {}", sequence.len());
    println!("start: {}", g.vertex_name(start));
    println!("verified: {valid}");
    Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let g = args.input.load(args.seed)?;
    let dm = apsp(&g);
    let sequence = BurningSequence::parse(&args.seq, &g)?;
    let valid = verify(&sequence, &dm)?;
    if valid {
        println!("valid");
        Ok(ExitCode::SUCCESS)
    } else {
        let covered = covered_set(&sequence, &dm)?;
        println!("invalid");
        println!("covered {} of {} vertices", covered.len(), g.n());
        Ok(ExitCode::from(1))
    }
}

fn cmd_exact(args: &ExactArgs) -> Result<ExitCode> {
    let g = args.input.load(args.seed)?;
    let limits = ExactLimits {
        max_n: args.max_n,
        max_k: args.max_k,
        node_budget: args.budget,
    };
    let result = burning_number_exact(&g, &limits)?;
    println!("b(G) = {}", result.burning_number);
    println!("witness: {}", result.witness.display(&g));
    println!("nodes explored: {}", result.nodes_explored);
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode> {
    let manifest = load_manifest(&args.manifest)?;
    let base_dir = args
        .manifest
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or_else(|| std::path::Path::new("."));
    let report = run_benchmark(&manifest, base_dir);
    let format = match args.out {
        OutFormat::Table => ReportFormat::Table,
        OutFormat::Json => ReportFormat::Json,
        OutFormat::Csv => ReportFormat::Csv,
    };
    let text = emit_report(&report, format);
    match &args.output {
        Some(path) => std::fs::write(path, &text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode> {
    let g = generate::from_spec(&args.spec, args.seed)?;
    let text = to_edge_list(&g);
    match &args.output {
        Some(path) => std::fs::write(path, &text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Exact(args) => cmd_exact(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Gen(args) => cmd_gen(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
