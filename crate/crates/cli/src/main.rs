use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;
use vgr_core::bounds::{self, Verdict};
use vgr_core::constructions::{self, Attachment};
use vgr_core::graph6::{self, Graph6Error};
use vgr_core::report::{self, BoundReportRecord, TableOptions, TABLE_HEADER};
use vgr_core::{classify, Classification, GenerateError, GenerateOptions, Graph};

#[derive(Parser)]
#[command(
    name = "vgr",
    version,
    about = "Vertex-girth-regular graphs: bounds, constructions and exhaustive generation"
)]
struct Cli {
    /// Worker threads for generation (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(short = 'k')]
    k: usize,
    #[arg(short = 'g')]
    g: usize,
    #[arg(short = 'l', long = "lambda")]
    lambda: u64,
}

#[derive(Subcommand)]
enum Command {
    /// All vgr(v,k,g,λ)-graphs up to isomorphism, as graph6 in canonical order.
    Generate {
        #[arg(short = 'v', required_unless_present = "all_orders_up_to")]
        v: Option<usize>,
        #[command(flatten)]
        params: Params,
        /// Print only the number of graphs.
        #[arg(long)]
        count_only: bool,
        /// Generate every order from `-v` (or the best lower bound) up to N.
        #[arg(long, value_name = "N")]
        all_orders_up_to: Option<usize>,
    },
    /// Lower bounds and non-existence rules for n(k,g,λ).
    Bounds {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        json: bool,
    },
    /// Keep the vertex-girth-regular graphs of graph6 input.
    Filter {
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(short = 'g')]
        g: Option<usize>,
        #[arg(short = 'l', long = "lambda")]
        lambda: Option<u64>,
        /// Append the profile after each graph6 line.
        #[arg(long)]
        with_profile: bool,
        /// graph6 files; standard input when absent or "-".
        files: Vec<PathBuf>,
    },
    /// Build a graph from a known construction and print it as graph6.
    #[command(subcommand)]
    Construct(Construct),
    /// Classify each graph of a graph6 file ("-" for standard input).
    Check { file: PathBuf },
    /// CSV table of bounds on n(k,g,λ) for every λ.
    Table {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        gmin: usize,
        #[arg(long)]
        gmax: usize,
        /// Search budget per row in seconds; 0 disables exhaustive search.
        #[arg(long, default_value_t = 5.0)]
        budget: f64,
        /// Largest order searched exhaustively.
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Generalized truncation of INNER by the |INNER|-regular graph OUTER.
    Truncation {
        inner: String,
        outer: String,
        /// Attach edges in a random order drawn from --seed.
        #[arg(long)]
        shuffle: bool,
    },
    /// Two copies of K_k joined by a perfect matching.
    DoubleComplete { k: usize },
    /// Cartesian product of two graphs.
    Product { first: String, second: String },
    /// The cycle C_g.
    Cycle { g: usize },
}

enum Failure {
    Malformed(anyhow::Error),
    Impossible(anyhow::Error),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.into())
    }
}

fn malformed(source: &str, e: Graph6Error) -> Failure {
    Failure::Malformed(anyhow!("{source}: {e}"))
}

fn generate_failure(e: GenerateError) -> Failure {
    match e {
        GenerateError::ParameterImpossible(_) => Failure::Impossible(e.into()),
        other => Failure::Other(other.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, err) = match failure {
                Failure::Malformed(e) => (2, e),
                Failure::Impossible(e) => (3, e),
                Failure::Other(e) => (1, e),
            };
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let opts = GenerateOptions { threads: cli.threads, ..GenerateOptions::default() };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match &cli.command {
        Command::Generate { v, params, count_only, all_orders_up_to } => {
            generate(&mut out, *v, *params, *count_only, *all_orders_up_to, &opts)?
        }
        Command::Bounds { params, json } => print_bounds(&mut out, *params, *json)?,
        Command::Filter { k, g, lambda, with_profile, files } => {
            filter(&mut out, (*k, *g, *lambda), *with_profile, files)?
        }
        Command::Construct(c) => construct(&mut out, c, cli.seed)?,
        Command::Check { file } => check(&mut out, file)?,
        Command::Table { k, gmin, gmax, budget, max_order } => {
            if *k < 3 || gmin < &3 || gmin > gmax {
                return Err(Failure::Other(anyhow!("table needs k >= 3 and 3 <= gmin <= gmax")));
            }
            let budget = if *budget > 0.0 {
                Some(Duration::try_from_secs_f64(*budget).context("invalid budget")?)
            } else {
                None
            };
            let topts = TableOptions { budget, max_order: *max_order, generate: opts.clone() };
            let rows = report::cmd_table(*k, *gmin, *gmax, &topts).map_err(generate_failure)?;
            writeln!(out, "{TABLE_HEADER}")?;
            for row in rows {
                writeln!(out, "{}", row.csv())?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn generate(
    out: &mut impl Write,
    v: Option<usize>,
    p: Params,
    count_only: bool,
    up_to: Option<usize>,
    opts: &GenerateOptions,
) -> Result<(), Failure> {
    let orders: Vec<usize> = match (v, up_to) {
        (Some(v), None) => vec![v],
        (start, Some(end)) => {
            let report =
                bounds::best_lower_bound(p.k as u32, p.g as u32, p.lambda).map_err(|e| Failure::Other(e.into()))?;
            let Some(lb) = report.best_lb else {
                let rule = report
                    .verdicts
                    .iter()
                    .find_map(|(_, v)| match v {
                        Verdict::Impossible(r) => Some(*r),
                        Verdict::NoInfo => None,
                    })
                    .map_or("bounds", |r| r.name());
                return Err(Failure::Impossible(anyhow!("no such graph exists ({rule})")));
            };
            (start.unwrap_or(lb as usize)..=end).collect()
        }
        (None, None) => unreachable!("clap requires -v or --all-orders-up-to"),
    };
    let several = orders.len() > 1;
    for v in orders {
        let graphs = vgr_core::generate_all(v, p.k, p.g, p.lambda, opts).map_err(generate_failure)?;
        if count_only {
            if several {
                writeln!(out, "{v} {}", graphs.len())?;
            } else {
                writeln!(out, "{}", graphs.len())?;
            }
        } else {
            for g in &graphs {
                writeln!(out, "{}", graph6::encode(g))?;
            }
        }
    }
    Ok(())
}

fn print_bounds(out: &mut impl Write, p: Params, json: bool) -> Result<(), Failure> {
    let report = bounds::best_lower_bound(p.k as u32, p.g as u32, p.lambda).map_err(|e| Failure::Other(e.into()))?;
    let record = BoundReportRecord::from_report(&report).map_err(|e| Failure::Other(e.into()))?;
    if json {
        serde_json::to_writer_pretty(&mut *out, &record).context("writing JSON")?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "k={} g={} lambda={}", p.k, p.g, p.lambda)?;
    writeln!(out, "moore bound: {}", report.moore)?;
    writeln!(out, "lambda cap: {}", report.lambda_cap)?;
    for rule in &record.rules {
        let value = match &rule.value {
            report::RuleValue::Bound(b) => b.to_string(),
            report::RuleValue::Verdict(s) => s.clone(),
        };
        writeln!(out, "{}: {value}", rule.name)?;
    }
    match record.best_lb {
        Some(lb) => writeln!(out, "best lower bound: {lb}")?,
        None => writeln!(out, "best lower bound: inf (impossible)")?,
    }
    if record.requires_moore {
        writeln!(out, "only a Moore graph can attain these parameters")?;
    }
    Ok(())
}

fn open_input(path: &Path) -> Result<(String, Box<dyn BufRead>), Failure> {
    if path.as_os_str() == "-" {
        return Ok(("<stdin>".into(), Box::new(BufReader::new(io::stdin()))));
    }
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok((path.display().to_string(), Box::new(BufReader::new(file))))
}

fn filter(
    out: &mut impl Write,
    (k, g, lambda): (Option<usize>, Option<usize>, Option<u64>),
    with_profile: bool,
    files: &[PathBuf],
) -> Result<(), Failure> {
    let stdin = [PathBuf::from("-")];
    let files = if files.is_empty() { &stdin[..] } else { files };
    for path in files {
        let (name, reader) = open_input(path)?;
        for item in report::filter_vgr(graph6::read_graph6(reader), None) {
            let (graph, prof) = item.map_err(|e| malformed(&name, e))?;
            if k.is_some_and(|k| k != prof.k)
                || g.is_some_and(|g| g != prof.g)
                || lambda.is_some_and(|l| l != prof.lambda)
            {
                continue;
            }
            if with_profile {
                writeln!(out, "{} {prof}", graph6::encode(&graph))?;
            } else {
                writeln!(out, "{}", graph6::encode(&graph))?;
            }
        }
    }
    Ok(())
}

fn check(out: &mut impl Write, path: &Path) -> Result<(), Failure> {
    let (name, reader) = open_input(path)?;
    for (i, item) in graph6::read_graph6(reader).enumerate() {
        let graph = item.map_err(|e| malformed(&name, e))?;
        let verdict = match classify(&graph) {
            Ok(Classification::Vgr(p)) => p.to_string(),
            Ok(Classification::NotVgr(reason)) => format!("not vgr: {reason}"),
            Err(e) => format!("not vgr: {e}"),
        };
        writeln!(out, "{}: {verdict}", i + 1)?;
    }
    Ok(())
}

fn construct(out: &mut impl Write, c: &Construct, seed: u64) -> Result<(), Failure> {
    let (graph, profile) = match c {
        Construct::Cycle { g } => {
            let (graph, p) = constructions::cycle_graph(*g).map_err(|e| Failure::Other(e.into()))?;
            (graph, Some(p))
        }
        Construct::DoubleComplete { k } => {
            let (graph, p) = constructions::double_complete(*k).map_err(|e| Failure::Other(e.into()))?;
            (graph, Some(p))
        }
        Construct::Truncation { inner, outer, shuffle } => {
            let attachment = if *shuffle { Attachment::Shuffled(seed) } else { Attachment::Ascending };
            let (graph, p) =
                constructions::generalized_truncation(&parse_graph(inner)?, &parse_graph(outer)?, attachment)
                    .map_err(|e| Failure::Other(e.into()))?;
            (graph, Some(p))
        }
        Construct::Product { first, second } => {
            let graph = constructions::cartesian_product(&parse_graph(first)?, &parse_graph(second)?)
                .map_err(|e| Failure::Other(e.into()))?;
            let p = classify(&graph).ok().and_then(|c| c.profile().copied());
            (graph, p)
        }
    };
    writeln!(out, "{}", graph6::encode(&graph))?;
    match profile {
        Some(p) => eprintln!("{p}"),
        None => eprintln!("not vertex-girth-regular"),
    }
    Ok(())
}

fn numbers<T: std::str::FromStr>(text: &str) -> Result<Vec<T>, Failure>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    text.split(',')
        .map(|t| t.trim().parse::<T>().with_context(|| format!("bad number {t:?}")))
        .collect::<anyhow::Result<_>>()
        .map_err(Failure::Malformed)
}

/// Named graphs (`cycle:5`, `complete:6`, `kbip:3,3`, `gp:5,2`, `lcf:5,-5^7`,
/// `petersen`, `heawood`, `cube`, `octahedron`), inline `g6:STRING`, or the
/// first graph of a graph6 file.
fn parse_graph(spec: &str) -> Result<Graph, Failure> {
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let bad = |e: vgr_core::GraphError| Failure::Malformed(anyhow!("{spec}: {e}"));
    let one = |arg: &str| -> Result<usize, Failure> {
        match numbers::<usize>(arg)?[..] {
            [n] => Ok(n),
            _ => Err(Failure::Malformed(anyhow!("{spec}: expected one number"))),
        }
    };
    let two = |arg: &str| -> Result<(usize, usize), Failure> {
        match numbers::<usize>(arg)?[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Failure::Malformed(anyhow!("{spec}: expected two numbers"))),
        }
    };
    match name {
        "cycle" => Graph::cycle(one(arg)?).map_err(bad),
        "complete" => Graph::complete(one(arg)?).map_err(bad),
        "path" => Graph::path(one(arg)?).map_err(bad),
        "kbip" => {
            let (a, b) = two(arg)?;
            Graph::complete_bipartite(a, b).map_err(bad)
        }
        "gp" => {
            let (n, s) = two(arg)?;
            Graph::generalized_petersen(n, s).map_err(bad)
        }
        "lcf" => {
            let (pattern, repeats) = arg.split_once('^').unwrap_or((arg, "1"));
            let repeats = one(repeats)?;
            Graph::from_lcf(&numbers::<isize>(pattern)?, repeats).map_err(bad)
        }
        "petersen" if arg.is_empty() => Ok(Graph::petersen()),
        "heawood" if arg.is_empty() => Ok(Graph::heawood()),
        "cube" if arg.is_empty() => Ok(Graph::cube()),
        "octahedron" if arg.is_empty() => Ok(Graph::octahedron()),
        "g6" => graph6::decode(arg, 1).map_err(|e| malformed(spec, e)),
        _ => {
            let path = Path::new(spec);
            if !path.exists() {
                return Err(Failure::Malformed(anyhow!("unknown graph {spec:?}")));
            }
            let (source, reader) = open_input(path)?;
            match graph6::read_graph6(reader).next() {
                Some(item) => item.map_err(|e| malformed(&source, e)),
                None => Err(Failure::Malformed(anyhow!("{source}: no graph found"))),
            }
        }
    }
}
