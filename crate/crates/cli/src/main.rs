//! `regbound` command-line interface.

use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use regbound::association::associate_detailed;
use regbound::bounds::{
    known_v, lower_bound_graph, mu_bound, ramsey_brute_force, ramsey_lookup, standard_bounds,
    thresholds, BoundCertificate,
};
use regbound::graph::{coclique_extension, complete_multipartite, k_tilde, line_graph};
use regbound::io::{self, Format};
use regbound::search::{v_search_with, SearchOptions};
use regbound::spectra::spectrum;
use regbound::verify::{run_suite, Suite};
use regbound::{Graph, HoffmanGraph, Lambda};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "regbound", version, about = "Second-eigenvalue bounds for regular graphs via Hoffman graphs")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for searches and suites (default: all cores).
    #[arg(long, global = true, env = "REGBOUND_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency spectrum of a graph file (`-` reads stdin).
    Spectrum(GraphInput),
    /// Build a named graph.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Hoffman graph operations on a JSON Hoffman graph file.
    Hoffman {
        #[command(subcommand)]
        op: HoffmanOp,
    },
    /// Associated Hoffman graph of the large maximal cliques.
    Associate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Thresholds, known values and Ramsey bounds.
    Bounds {
        #[command(subcommand)]
        what: BoundsOp,
    },
    /// Exhaustive search for v(k, λ).
    Search {
        #[arg(long)]
        k: usize,
        /// Exact rational (`3/2`), integer or decimal.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Lambda,
        #[arg(long)]
        n_max: usize,
        /// Disable the spectral interlacing prune.
        #[arg(long)]
        no_prune: bool,
    },
    /// Run verification suites and print one certificate per claim.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (edge list, JSON or graph6); `-` for stdin.
    path: PathBuf,
    /// Input format; guessed from the contents when omitted.
    #[arg(long)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct GraphOutput {
    /// Output format for the graph.
    #[arg(long = "to", value_enum, default_value_t = FormatArg::Edgelist)]
    to: FormatArg,
    /// Write the graph here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    CompleteMultipartite {
        /// Part sizes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[command(flatten)]
        out: GraphOutput,
    },
    LineGraph {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: GraphOutput,
    },
    Complement {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: GraphOutput,
    },
    KTilde {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: GraphOutput,
    },
    CocliqueExt {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        out: GraphOutput,
    },
    LowerBoundGraph {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        a: u64,
        #[command(flatten)]
        out: GraphOutput,
    },
}

#[derive(Subcommand)]
enum HoffmanOp {
    SpecialMatrix { path: PathBuf },
    LambdaMin { path: PathBuf },
    Fatten {
        path: PathBuf,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: GraphOutput,
    },
}

#[derive(Subcommand)]
enum BoundsOp {
    Thresholds {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Lambda,
    },
    KnownV {
        #[arg(long)]
        k: u64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Lambda,
    },
    MuBound {
        #[arg(long)]
        lambda: u64,
    },
    Ramsey {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        /// Also decide the value by exhaustive search up to this order.
        #[arg(long)]
        brute_force: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Json,
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Json => Format::Json,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Spectra,
    Hoffman,
    Association,
    Bounds,
    Search,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Spectra => Suite::Spectra,
            SuiteArg::Hoffman => Suite::Hoffman,
            SuiteArg::Association => Suite::Association,
            SuiteArg::Bounds => Suite::Bounds,
            SuiteArg::Search => Suite::Search,
        }
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(input: &GraphInput) -> anyhow::Result<Graph> {
    let text = read_text(&input.path)?;
    let g = match input.format {
        Some(f) => io::read_graph(&text, f.into()),
        None => io::read_graph_auto(&text),
    };
    g.with_context(|| format!("parsing {}", input.path.display()))
}

fn read_hoffman(path: &Path) -> anyhow::Result<HoffmanGraph> {
    HoffmanGraph::from_json(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn emit_graph(g: &Graph, out: &GraphOutput, json_mode: bool, extra: Option<Value>) -> anyhow::Result<()> {
    let text = io::write_graph(g, out.to.into());
    if let Some(path) = &out.output {
        fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    if json_mode {
        let mut v = json!({
            "order": g.order(),
            "edges": g.edges().iter().map(|&(u, w)| [u, w]).collect::<Vec<_>>(),
            "graph6": io::to_graph6(g),
        });
        if let Some(e) = extra {
            v["certificate"] = e;
        }
        println!("{v}");
    } else {
        if out.output.is_none() {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
        }
        if let Some(e) = extra {
            eprintln!("{}", serde_json::to_string_pretty(&e)?);
        }
    }
    Ok(())
}

fn print_certificates(certs: &[BoundCertificate], json_mode: bool) -> u8 {
    for c in certs {
        if json_mode {
            println!("{}", c.to_json());
        } else {
            println!("{:<40} {}", c.claim, if c.verified { "PASS" } else { "FAIL" });
        }
    }
    if certs.iter().all(|c| c.verified) {
        0
    } else {
        EXIT_VERIFY
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let json_mode = cli.json;
    match cli.command {
        Command::Spectrum(input) => {
            let s = spectrum(&read_graph(&input)?);
            if json_mode {
                println!("{}", s.to_json());
            } else {
                println!("{s}");
            }
        }
        Command::Construct { what } => match what {
            Construct::CompleteMultipartite { parts, out } => {
                emit_graph(&complete_multipartite(&parts)?, &out, json_mode, None)?
            }
            Construct::LineGraph { input, out } => {
                emit_graph(&line_graph(&read_graph(&input)?)?, &out, json_mode, None)?
            }
            Construct::Complement { input, out } => {
                emit_graph(&read_graph(&input)?.complement(), &out, json_mode, None)?
            }
            Construct::KTilde { m, out } => emit_graph(&k_tilde(m)?, &out, json_mode, None)?,
            Construct::CocliqueExt { input, q, out } => {
                emit_graph(&coclique_extension(&read_graph(&input)?, q)?, &out, json_mode, None)?
            }
            Construct::LowerBoundGraph { lambda, a, out } => {
                let (g, cert) = lower_bound_graph(lambda, a)?;
                emit_graph(&g, &out, json_mode, Some(serde_json::to_value(&cert)?))?;
                if !cert.verified {
                    return Ok(EXIT_VERIFY);
                }
            }
        },
        Command::Hoffman { op } => match op {
            HoffmanOp::SpecialMatrix { path } => {
                let rows = read_hoffman(&path)?.special_matrix()?.rows();
                if json_mode {
                    println!("{}", json!({ "special_matrix": rows }));
                } else {
                    for r in rows {
                        let cells: Vec<String> = r.iter().map(|x| format!("{x:>3}")).collect();
                        println!("{}", cells.join(" "));
                    }
                }
            }
            HoffmanOp::LambdaMin { path } => {
                let l = read_hoffman(&path)?.lambda_min()?;
                if json_mode {
                    println!("{}", json!({ "lambda_min": l }));
                } else {
                    println!("{l}");
                }
            }
            HoffmanOp::Fatten { path, p, out } => {
                emit_graph(&read_hoffman(&path)?.fatten(p)?, &out, json_mode, None)?
            }
        },
        Command::Associate { input, m, n } => {
            let g = read_graph(&input)?;
            let a = associate_detailed(&g, m, n)?;
            let p = &a.partition;
            if json_mode {
                println!(
                    "{}",
                    json!({ "partition": serde_json::to_value(p)?, "hoffman": serde_json::to_value(&a.hoffman)? })
                );
            } else {
                println!("large maximal cliques: {}", p.family.cliques.len());
                println!("classes: {}", p.classes.len());
                for (i, c) in p.classes.iter().enumerate() {
                    println!("  class {i}: {} cliques, quasi-clique {:?}", c.members.len(), c.quasi_clique);
                }
                println!("hypotheses hold: {}", p.hypotheses_hold);
                println!("transitive: {}", p.transitive);
                for w in &p.warnings {
                    println!("warning: {w}");
                }
                println!("{}", a.hoffman.to_json());
            }
        }
        Command::Bounds { what } => match what {
            BoundsOp::Thresholds { lambda } => {
                let t = thresholds(&lambda)?;
                if json_mode {
                    println!("{}", serde_json::to_string(&t)?);
                } else {
                    println!("lambda  {}", t.lambda);
                    println!("t'      {}", t.t_prime);
                    println!("m'      {}", t.m_prime);
                }
            }
            BoundsOp::KnownV { k, lambda } => {
                let v = known_v(k, &lambda)?;
                if json_mode {
                    println!("{}", json!({ "k": k, "lambda": lambda.to_string(), "v": v }));
                } else {
                    println!("{v}");
                }
            }
            BoundsOp::MuBound { lambda } => {
                let mu = mu_bound(lambda)?;
                if json_mode {
                    println!("{}", json!({ "lambda": lambda, "mu_bound": mu }));
                } else {
                    println!("{mu}");
                }
            }
            BoundsOp::Ramsey { s, t, brute_force } => {
                let table = ramsey_lookup(s, t)?;
                let derived = standard_bounds(s, t)?;
                let brute = brute_force.map(|n| ramsey_brute_force(s, t, n)).transpose()?;
                if json_mode {
                    println!(
                        "{}",
                        json!({
                            "s": s, "t": t,
                            "value": table.interval().to_string(),
                            "standard_bounds": derived.to_string(),
                            "brute_force": brute,
                        })
                    );
                } else {
                    println!("R({s},{t}) = {table}");
                    println!("standard bounds {derived}");
                    match brute {
                        Some(Some(v)) => println!("brute force {v}"),
                        Some(None) => println!("brute force: above the order cap"),
                        None => {}
                    }
                }
            }
        },
        Command::Search { k, lambda, n_max, no_prune } => {
            let report = v_search_with(k, &lambda, n_max, SearchOptions { prune: !no_prune, threads: None })?;
            if json_mode {
                println!("{}", report.to_json());
            } else {
                println!("order  generated  passed");
                for c in &report.counts {
                    println!("{:>5}  {:>9}  {:>6}", c.order, c.generated, c.passed);
                }
                match report.exact_v {
                    Some(v) => println!("v({k}, {lambda}) = {v} over orders up to {}", report.searched_up_to),
                    None => println!("no graph up to order {}", report.searched_up_to),
                }
                for e in &report.extremal_graphs {
                    println!("  {}  lambda2 = {:.9}", e.graph6, e.lambda2);
                }
                for note in &report.notes {
                    println!("note: {note}");
                }
            }
            if !report.complete {
                return Ok(EXIT_CAP);
            }
        }
        Command::Verify { suite } => {
            let certs = run_suite(suite.into())?;
            return Ok(print_certificates(&certs, json_mode));
        }
    }
    Ok(0)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<regbound::Error>() {
        Some(regbound::Error::UnsupportedSize { .. } | regbound::Error::Overflow(_)) => EXIT_CAP,
        Some(regbound::Error::Consistency(_)) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
