use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use coprime_core::classify::{
    classify_group, run_theorem_harness, ClassifyOptions, Family, HarnessOptions, TheoremId, Universe,
};
use coprime_core::coprime::export;
use coprime_core::coprime::DEFAULT_ORDER_CAP;
use coprime_core::embed::{self, EmbedError};
use coprime_core::group::parse::parse_group;
use coprime_core::group::CayleyTableJson;
use coprime_core::{CoprimeGraph, GroupHandle, PrimeSetGraph};

mod render;

#[derive(Parser, Debug)]
#[command(name = "coprime", version, about = "Co-prime graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(clap::Args, Debug)]
struct GroupArg {
    /// Group spec, e.g. `Z(6)`, `D(60)`, `Dic(12)`, `S(8)`, `A(5)`, `S(3)xZ(5)`.
    #[arg(required_unless_present = "table", conflicts_with = "table")]
    spec: Option<String>,
    /// Cayley table as JSON `{"n": int, "table": [[int]]}`.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the co-prime graph of a group and print it.
    Graph {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Print the prime-support quotient instead of the element graph.
        #[arg(long)]
        reduced: bool,
        /// Largest element graph to materialize.
        #[arg(long, env = "COPRIME_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: u64,
    },
    /// Decide every graph class and compare with the group-level criteria.
    Classify {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
        /// Run the detectors on the element graph instead of the quotient.
        #[arg(long)]
        full_graph: bool,
        #[arg(long, env = "COPRIME_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: u64,
    },
    /// Check the characterisations over whole group families.
    Verify {
        /// Comma-separated families: cyclic, dihedral, dicyclic, symmetric,
        /// alternating, abelian-pairs. Default: the full corpus.
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        /// Order bound for cyclic, dihedral, dicyclic and abelian-pairs.
        #[arg(long)]
        max_order: Option<u64>,
        /// Degree bound for symmetric and alternating.
        #[arg(long, default_value_t = 8)]
        max_n: u64,
        /// Comma-separated ids: 3.2 3.3 3.4 3.5 3.6 4.1 4.2 4.3 P1 P2 P3 P4. Default: all.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<TheoremId>,
        /// Additional groups by spec.
        #[arg(long = "group", value_name = "SPEC")]
        groups: Vec<String>,
        /// Additional groups as Cayley-table JSON files.
        #[arg(long = "table", value_name = "FILE")]
        tables: Vec<PathBuf>,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
        #[arg(long)]
        full_graph: bool,
        #[arg(long, env = "COPRIME_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: u64,
    },
    /// Embed a graph as an induced subgraph of the co-prime graph of Z_k.
    Embed {
        /// Edge list (`n m` header, then `u v` lines) or DOT file; `-` for stdin.
        path: PathBuf,
        /// Use the construction without per-vertex primes; may collide.
        #[arg(long)]
        literal: bool,
        /// Print the verified induced subgraph as DOT after the plan.
        #[arg(long)]
        dot: bool,
    },
}

/// Outcome of a successful command: whether everything agreed.
enum Status {
    Clean,
    Violations,
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_table(path: &Path) -> Result<GroupHandle> {
    let text = read_input(path)?;
    let json: CayleyTableJson =
        serde_json::from_str(&text).with_context(|| format!("parsing Cayley table {}", path.display()))?;
    GroupHandle::from_json(&json).with_context(|| format!("invalid Cayley table {}", path.display()))
}

fn load_group(arg: &GroupArg) -> Result<GroupHandle> {
    match (&arg.spec, &arg.table) {
        (Some(spec), None) => parse_group(spec).with_context(|| format!("cannot parse group spec {spec:?}")),
        (None, Some(path)) => load_table(path),
        _ => bail!("give either a group spec or --table"),
    }
}

fn positive(cap: u64) -> Result<u64> {
    if cap == 0 {
        bail!("order cap must be positive");
    }
    Ok(cap)
}

fn cmd_graph(group: &GroupArg, format: GraphFormat, reduced: bool, order_cap: u64) -> Result<String> {
    let g = load_group(group)?;
    if reduced {
        let r = PrimeSetGraph::build(&g);
        return Ok(match format {
            GraphFormat::Dot => export::reduced_to_dot(&r),
            GraphFormat::Json => export::reduced_to_json(&r) + "\n",
            GraphFormat::Table => render::reduced_table(&r),
        });
    }
    let cg = CoprimeGraph::build(&g, positive(order_cap)?)
        .with_context(|| format!("cannot build the element graph of {g}; try --reduced"))?;
    Ok(match format {
        GraphFormat::Dot => export::coprime_to_dot(&cg),
        GraphFormat::Json => export::coprime_to_json(&cg) + "\n",
        GraphFormat::Table => render::coprime_table(&cg),
    })
}

fn cmd_classify(group: &GroupArg, format: ReportFormat, full_graph: bool, order_cap: u64) -> Result<(String, Status)> {
    let g = load_group(group)?;
    let opts = ClassifyOptions { full_graph, order_cap: positive(order_cap)? };
    let report = classify_group(&g, &opts);
    let status = if report.failed { Status::Violations } else { Status::Clean };
    let text = match format {
        ReportFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
        ReportFormat::Table => render::report_table(&report),
    };
    Ok((text, status))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    families: &[Family],
    max_order: Option<u64>,
    max_n: u64,
    theorems: &[TheoremId],
    groups: &[String],
    tables: &[PathBuf],
    opts: HarnessOptions,
    format: ReportFormat,
) -> Result<(String, Status)> {
    let mut universe = if families.is_empty() && groups.is_empty() && tables.is_empty() {
        Universe::default_corpus()
    } else {
        Universe::new()
    };
    for &f in families {
        let bound = if f.bounds_degree() {
            max_n
        } else {
            max_order.unwrap_or(match f {
                Family::Cyclic => 500,
                _ => 200,
            })
        };
        universe = universe.with_family(f, bound);
    }
    for spec in groups {
        let g = parse_group(spec).with_context(|| format!("cannot parse group spec {spec:?}"))?;
        universe = universe.with_group(g);
    }
    for path in tables {
        universe = universe.with_group(load_table(path)?);
    }
    if universe.is_empty() {
        bail!("the universe is empty");
    }
    let theorems = if theorems.is_empty() { TheoremId::ALL.to_vec() } else { theorems.to_vec() };
    let run = run_theorem_harness(&universe, &theorems, &opts)?;
    let status = if run.all_upheld() { Status::Clean } else { Status::Violations };
    let text = match format {
        ReportFormat::Json => serde_json::to_string_pretty(&run)? + "\n",
        ReportFormat::Table => render::harness_table(&run),
    };
    Ok((text, status))
}

fn looks_like_dot(text: &str) -> bool {
    let first = text.split_whitespace().next().unwrap_or("");
    ["graph", "strict", "digraph"].iter().any(|k| first.eq_ignore_ascii_case(k))
}

fn cmd_embed(path: &Path, literal: bool, emit_dot: bool) -> Result<(String, Status)> {
    let text = read_input(path)?;
    let is_dot = looks_like_dot(&text);
    let parsed = if is_dot { embed::parse_dot(&text) } else { embed::parse_edge_list(&text) }
        .with_context(|| format!("cannot parse {}", path.display()))?;
    let h = &parsed.graph;
    let plan = if literal { embed::paper_literal_plan(h) } else { embed::plan_embedding(h) };
    let plan = match plan {
        Ok(p) => p,
        Err(EmbedError::Collision(c)) => {
            let json = serde_json::json!({
                "construction": "literal",
                "collision": {
                    "pair": [c.pair.0, c.pair.1],
                    "order": c.order.to_string(),
                    "available": c.available.to_string(),
                    "message": c.to_string(),
                }
            });
            return Ok((serde_json::to_string_pretty(&json)? + "\n", Status::Violations));
        }
        Err(e) => return Err(e.into()),
    };
    let check = embed::verify_embedding(h, &plan);
    let mut json = plan.to_json();
    json["verified"] = check.ok().into();
    json["elements"] = check.elements.iter().map(|x| x.to_string()).collect::<Vec<_>>().into();
    json["mismatches"] = serde_json::to_value(&check.mismatches)?;
    json["problems"] = serde_json::to_value(&check.problems)?;
    let mut out = serde_json::to_string_pretty(&json)? + "\n";
    if emit_dot {
        out.push_str(&embed::embedding_to_dot(h, &check, parsed.names.as_deref()));
    }
    Ok((out, if check.ok() { Status::Clean } else { Status::Violations }))
}

fn run(cli: Cli) -> Result<(String, Status)> {
    match cli.command {
        Command::Graph { group, format, reduced, order_cap } => {
            Ok((cmd_graph(&group, format, reduced, order_cap)?, Status::Clean))
        }
        Command::Classify { group, format, full_graph, order_cap } => {
            cmd_classify(&group, format, full_graph, order_cap)
        }
        Command::Verify {
            families,
            max_order,
            max_n,
            theorems,
            groups,
            tables,
            jobs,
            format,
            full_graph,
            order_cap,
        } => {
            let opts = HarnessOptions { jobs, classify: ClassifyOptions { full_graph, order_cap: positive(order_cap)? } };
            cmd_verify(&families, max_order, max_n, &theorems, &groups, &tables, opts, format)
        }
        Command::Embed { path, literal, dot } => cmd_embed(&path, literal, dot),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, status)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            match status {
                Status::Clean => ExitCode::SUCCESS,
                Status::Violations => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
