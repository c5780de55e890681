mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orientkit_core::characterize::{
    decide_join_with, decide_with, forbidden_catalog, DecideOptions, Verdict, Witness,
    DEFAULT_MINOR_BUDGET,
};
use orientkit_core::families::cycle;
use orientkit_core::format::to_graph6;
use orientkit_core::recognize::Obstruction;
use orientkit_core::selftest::{self, CheckReport};
use orientkit_core::{recognize_2sat, recognize_bruteforce, Graph, ProductKind, RecognitionResult};

use input::{load_graph, load_orientation, write_graph6, write_orientation};

const YES: u8 = 0;
const NO: u8 = 1;
const ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "orientkit", version, about = "Decide 1-perfect orientability of graphs and graph products")]
struct Cli {
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cartesian,
    #[value(alias = "lexicographic")]
    Lex,
    #[value(alias = "tensor")]
    Direct,
    Strong,
}

impl From<Kind> for ProductKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cartesian => ProductKind::Cartesian,
            Kind::Lex => ProductKind::Lexicographic,
            Kind::Direct => ProductKind::Direct,
            Kind::Strong => ProductKind::Strong,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DecideKind {
    Cartesian,
    #[value(alias = "lexicographic")]
    Lex,
    #[value(alias = "tensor")]
    Direct,
    Strong,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is 1-perfectly orientable.
    Recognize {
        /// Graph file (graph6 or edge list), `-` for stdin, or `@fixture`.
        graph: String,
        /// Use the exhaustive search instead of 2-SAT.
        #[arg(long)]
        brute: bool,
    },
    /// Print a 1-perfect orientation of a graph.
    Orient {
        graph: String,
        /// Also write the orientation to a file (`.json` for JSON, text otherwise).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a product graph.
    Product {
        #[arg(long, value_enum)]
        kind: Kind,
        g: String,
        h: String,
        /// Write the product in graph6 to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide a product (or join) through its factors.
    Decide {
        #[arg(long, value_enum)]
        kind: DecideKind,
        g: String,
        h: String,
        /// Write the certificate of a yes-verdict to this file.
        #[arg(long)]
        certificate_out: Option<PathBuf>,
        /// Skip the witness search on no-verdicts.
        #[arg(long)]
        no_witness: bool,
        /// Node budget for the induced-minor witness search.
        #[arg(long, default_value_t = DEFAULT_MINOR_BUDGET)]
        minor_budget: u64,
    },
    /// List the minimal forbidden graphs.
    Catalog,
    /// Check that an orientation is 1-perfect.
    Verify {
        /// Orientation file in JSON or text form.
        orientation: String,
    },
    /// Run the built-in sweeps.
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Worker threads.
        #[arg(long, env = "ORIENTKIT_JOBS")]
        jobs: Option<usize>,
        /// Replace a catalog entry with a 1-p.o. graph.
        #[arg(long, hide = true)]
        corrupt_catalog: bool,
    },
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => print!("{}", text()),
    }
}

fn obstruction_text(o: &Obstruction) -> String {
    match o {
        Obstruction::Conflict { variable, edges } => format!(
            "contradiction on edge {} {} through {} edge(s): {}\n",
            variable.0,
            variable.1,
            edges.len(),
            edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
        ),
        Obstruction::Exhausted { nodes } => format!("no orientation after {nodes} search nodes\n"),
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::InducedSubgraph { pattern, mapping } => format!("induced {pattern} on vertices {mapping:?}\n"),
        Witness::InducedMinor { pattern, branch_sets, .. } => {
            let sets: Vec<_> = branch_sets.iter().map(|s| s.as_slice()).collect();
            format!("induced minor {pattern} with branch sets {sets:?}\n")
        }
    }
}

fn recognize(format: Format, g: &Graph, brute: bool) -> Result<u8> {
    let r = if brute { recognize_bruteforce(g)? } else { recognize_2sat(g) };
    let value = match &r {
        RecognitionResult::Yes(d) => json!({ "is_1po": true, "certificate": d }),
        RecognitionResult::No(o) => json!({ "is_1po": false, "obstruction": o }),
    };
    emit(format, &value, || match &r {
        RecognitionResult::Yes(d) => format!("1-p.o.: yes\n{}", d.to_text()),
        RecognitionResult::No(o) => format!("1-p.o.: no\n{}", obstruction_text(o)),
    });
    Ok(if r.is_yes() { YES } else { NO })
}

fn orient(format: Format, g: &Graph, out: Option<PathBuf>) -> Result<u8> {
    let Some(d) = recognize_2sat(g).into_certificate() else {
        eprintln!("graph is not 1-perfectly orientable");
        return Ok(NO);
    };
    if let Some(path) = out {
        write_orientation(&path, &d)?;
    }
    emit(format, &serde_json::to_value(&d)?, || d.to_text());
    Ok(YES)
}

fn product(format: Format, kind: ProductKind, g: &Graph, h: &Graph, out: Option<PathBuf>) -> Result<u8> {
    let p = kind.apply(g, h);
    if let Some(path) = out {
        write_graph6(&path, &p)?;
    }
    let g6 = to_graph6(&p);
    let value = json!({ "kind": kind, "n": p.n(), "m": p.edge_count(), "graph6": g6 });
    emit(format, &value, || format!("{g6}\n"));
    Ok(YES)
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = format!("{}: 1-p.o. {} ({})\n", v.kind, if v.is_1po { "yes" } else { "no" }, v.condition);
    if let Some(w) = &v.witness {
        s.push_str(&witness_text(w));
    }
    s
}

fn decide(format: Format, kind: DecideKind, g: &Graph, h: &Graph, opts: &DecideOptions, cert_out: Option<PathBuf>) -> Result<u8> {
    let v = match kind {
        DecideKind::Join => decide_join_with(g, h, opts)?,
        DecideKind::Cartesian => decide_with(ProductKind::Cartesian, g, h, opts)?,
        DecideKind::Lex => decide_with(ProductKind::Lexicographic, g, h, opts)?,
        DecideKind::Direct => decide_with(ProductKind::Direct, g, h, opts)?,
        DecideKind::Strong => decide_with(ProductKind::Strong, g, h, opts)?,
    };
    if let (Some(path), Some(d)) = (cert_out, &v.certificate) {
        write_orientation(&path, d)?;
    }
    emit(format, &serde_json::to_value(&v)?, || verdict_text(&v));
    Ok(if v.is_1po { YES } else { NO })
}

fn catalog(format: Format) -> Result<u8> {
    let entries: Vec<Value> = forbidden_catalog()
        .into_iter()
        .map(|(name, g)| {
            json!({
                "name": name,
                "n": g.n(),
                "m": g.edge_count(),
                "graph6": to_graph6(&g),
                "is_1po": recognize_2sat(&g).is_yes(),
            })
        })
        .collect();
    emit(format, &Value::Array(entries.clone()), || {
        entries
            .iter()
            .map(|e| format!("{} {} n={} m={}\n", e["name"].as_str().unwrap_or(""), e["graph6"].as_str().unwrap_or(""), e["n"], e["m"]))
            .collect()
    });
    Ok(YES)
}

fn verify(format: Format, source: &str) -> Result<u8> {
    let d = load_orientation(source)?;
    let violations = d.violations();
    let ok = violations.is_empty();
    let value = json!({ "one_perfect": ok, "violations": violations });
    emit(format, &value, || {
        if ok {
            "1-perfect\n".to_string()
        } else {
            format!("not 1-perfect at vertices {violations:?}\n")
        }
    });
    Ok(if ok { YES } else { NO })
}

fn run_selftest(format: Format, level: Level, jobs: Option<usize>, corrupt: bool) -> Result<u8> {
    if let Some(jobs) = jobs {
        if jobs == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    let mut catalog = forbidden_catalog();
    if corrupt {
        catalog[1].1 = cycle(6);
    }
    let reports: Vec<CheckReport> = match level {
        Level::Quick => selftest::quick(&catalog),
        Level::Full => selftest::full(&catalog),
    };
    let passed = reports.iter().all(|r| r.passed);
    let value = json!({ "passed": passed, "checks": reports });
    emit(format, &value, || reports.iter().map(|r| r.line() + "\n").collect());
    Ok(if passed { YES } else { NO })
}

fn run(cli: Cli) -> Result<u8> {
    let format = cli.format;
    match cli.command {
        Command::Recognize { graph, brute } => recognize(format, &load_graph(&graph)?, brute),
        Command::Orient { graph, out } => orient(format, &load_graph(&graph)?, out),
        Command::Product { kind, g, h, out } => product(format, kind.into(), &load_graph(&g)?, &load_graph(&h)?, out),
        Command::Decide { kind, g, h, certificate_out, no_witness, minor_budget } => {
            let opts = DecideOptions { witness: !no_witness, minor_budget };
            decide(format, kind, &load_graph(&g)?, &load_graph(&h)?, &opts, certificate_out)
        }
        Command::Catalog => catalog(format),
        Command::Verify { orientation } => verify(format, &orientation),
        Command::Selftest { level, jobs, corrupt_catalog } => run_selftest(format, level, jobs, corrupt_catalog),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR)
        }
    }
}
