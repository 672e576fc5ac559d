//! `kkec`: spectral radius, `l`-edge-connectivity and minimality queries on
//! single graphs, family construction, enumeration, and the verification
//! suites.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use kkec_core::connectivity::{cut_witness, is_minimally_kl_edge_connected, l_edge_connectivity};
use kkec_core::constructions::FamilySpec;
use kkec_core::enumeration::{enumerate_connected_by_order, enumerate_connected_by_size, write_stream};
use kkec_core::graph::{bits, parse_graph6_lines};
use kkec_core::spectral::spectral_radius;
use kkec_core::verify::{run_suite, ParamRange, Suite, SuiteConfig, VerificationReport};
use kkec_core::{Graph, Graph6};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "kkec", version, about = "Spectral extremal checks for minimally (k,k)-edge-connected graphs")]
struct Cli {
    /// Worker threads. Defaults to the number of CPUs.
    #[arg(long, global = true, env = "KKEC_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius of a graph or family member.
    Rho {
        #[command(flatten)]
        input: Input,
        /// Residual tolerance of the eigensolver.
        #[arg(long, default_value_t = kkec_core::spectral::DEFAULT_TOL)]
        tol: f64,
    },
    /// `l`-edge-connectivity with a minimum cut.
    Kappa {
        #[command(flatten)]
        input: Input,
        /// Part counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<usize>,
    },
    /// Minimal (k,k)-edge-connectivity by definition and by single-edge deletion.
    /// `--k` sets both the level checked and, with `--family`, the family parameter.
    CheckMinimal {
        #[command(flatten)]
        input: Input,
    },
    /// Builds a family member: graph6 line, then a JSON metadata line.
    Build {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Writes all connected graphs of one order or size as a graph6 stream
    /// with a checksummed manifest.
    Enumerate {
        /// `n=<order>` or `m=<size>`.
        #[arg(long)]
        point: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Runs a verification suite and writes its JSON report.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        k: Option<usize>,
        /// `n=a..b` or `m=a..b`.
        #[arg(long)]
        range: Option<ParamRange>,
        #[arg(long)]
        seed: Option<u64>,
        /// Report path. Printed to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV of the extremal tables.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// A graph6 string.
    #[arg(long, conflicts_with_all = ["file", "family"])]
    graph6: Option<String>,
    /// A file of graph6 lines.
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family tag, e.g. pendant-bipartite, even-extremal, k1-family.
    #[arg(long)]
    family: Option<String>,
    #[arg(long = "k", id = "family_k")]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    t1: Option<usize>,
    #[arg(long)]
    t2: Option<usize>,
    #[arg(long)]
    t3: Option<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<Option<FamilySpec>> {
        let Some(tag) = &self.family else { return Ok(None) };
        let mut obj = Map::new();
        obj.insert("family".into(), json!(tag.replace('-', "_")));
        for (name, v) in [("k", self.k), ("n", self.n), ("m", self.m), ("t1", self.t1), ("t2", self.t2), ("t3", self.t3)] {
            if let Some(v) = v {
                obj.insert(name.into(), json!(v));
            }
        }
        let spec: FamilySpec = serde_json::from_value(Value::Object(obj)).with_context(|| format!("family {tag}"))?;
        spec.validate()?;
        Ok(Some(spec))
    }
}

/// A graph to report on, with the family it came from when there is one.
struct Subject {
    label: String,
    graph: Graph,
    spec: Option<FamilySpec>,
}

impl Input {
    fn subjects(&self) -> Result<Vec<Subject>> {
        if let Some(spec) = self.family.spec()? {
            return Ok(vec![Subject { label: spec.to_string(), graph: spec.build()?, spec: Some(spec) }]);
        }
        let graphs = match (&self.graph6, &self.file) {
            (Some(s), None) => vec![Graph::from_graph6(s.trim())?],
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                parse_graph6_lines(&text)?
            }
            _ => bail!("give one of --graph6, --file or --family"),
        };
        Ok(graphs.into_iter().map(|g| Subject { label: g.to_graph6(), graph: g, spec: None }).collect())
    }
}

fn format_parts(parts: &[u64]) -> String {
    let sets: Vec<String> = parts
        .iter()
        .map(|&p| format!("{{{}}}", bits(p).map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    sets.join(" | ")
}

fn cmd_rho(input: &Input, tol: f64) -> Result<()> {
    for s in input.subjects()? {
        let est = spectral_radius(&s.graph, tol)?;
        let mut line = format!("{}: rho = {:.12} residual = {:.3e}", s.label, est.rho, est.residual);
        if let Some(f) = s.spec.map(|spec| spec.rho_formula()).transpose()?.flatten() {
            let err = (f.value - est.rho).abs();
            line += &format!(
                " closed_form = {:.12} |diff| = {:.3e} match = {}{}",
                f.value,
                err,
                if err <= kkec_core::verify::FORMULA_TOL { "yes" } else { "no" },
                if f.within_hypothesis { "" } else { " (below threshold)" }
            );
        }
        println!("{line}");
    }
    Ok(())
}

fn cmd_kappa(input: &Input, ls: &[usize]) -> Result<()> {
    for s in input.subjects()? {
        for &l in ls {
            let kappa = l_edge_connectivity(&s.graph, l)?;
            if s.graph.n() < l {
                println!("{}: kappa'_{l} = {kappa} (fewer than {l} vertices)", s.label);
                continue;
            }
            let w = cut_witness(&s.graph, l)?;
            let cut: Vec<String> = w.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("{}: kappa'_{l} = {kappa} parts = {} cut = [{}]", s.label, format_parts(&w.parts), cut.join(" "));
        }
    }
    Ok(())
}

fn cmd_check_minimal(input: &Input) -> Result<()> {
    let Some(k) = input.family.k else { bail!("--k is required") };
    if k < 2 {
        bail!("k must be at least 2, got {k}");
    }
    for s in input.subjects()? {
        let by_definition = is_minimally_kl_edge_connected(&s.graph, k, k)?;
        let mut by_deletion = l_edge_connectivity(&s.graph, k)? >= k;
        for (u, v) in s.graph.edges() {
            if !by_deletion {
                break;
            }
            by_deletion = l_edge_connectivity(&s.graph.without_edge(u, v), k)? == k - 1;
        }
        let yn = |b: bool| if b { "yes" } else { "no" };
        println!(
            "{}: minimal: {} (definition {}, single-edge deletion {}, agree {})",
            s.label,
            yn(by_definition),
            yn(by_definition),
            yn(by_deletion),
            yn(by_definition == by_deletion)
        );
    }
    Ok(())
}

fn cmd_build(family: &FamilyArgs) -> Result<()> {
    let Some(spec) = family.spec()? else { bail!("--family is required") };
    let g = spec.build()?;
    let f = spec.rho_formula()?;
    println!("{}", g.to_graph6());
    let meta = json!({
        "family": spec.tag(),
        "parameters": spec.params(),
        "n": g.n(),
        "m": g.m(),
        "rho_closed_form": f.as_ref().map(|f| f.value),
        "within_hypothesis": f.as_ref().map(|f| f.within_hypothesis),
        "rho_numeric": spectral_radius(&g, kkec_core::spectral::DEFAULT_TOL)?.rho,
    });
    println!("{}", serde_json::to_string(&meta)?);
    Ok(())
}

fn cmd_enumerate(point: &str, out: &Path) -> Result<()> {
    let (graphs, key, value) = match point.parse::<ParamRange>()? {
        ParamRange::Order(r) if r.start() == r.end() => (enumerate_connected_by_order(*r.start())?, "n", *r.start()),
        ParamRange::Size(r) if r.start() == r.end() => (enumerate_connected_by_size(*r.start())?, "m", *r.start()),
        _ => bail!("--point takes a single value, e.g. n=7"),
    };
    let params = BTreeMap::from([("connected".to_string(), "true".to_string()), (key.to_string(), value.to_string())]);
    let manifest = write_stream(out, &graphs, params)?;
    println!("{} graphs written to {} (sha256 {})", manifest.count, out.display(), manifest.sha256);
    Ok(())
}

fn write_csv(path: &PathBuf, report: &VerificationReport) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["k", "parameter", "rho_max", "argmax", "matched_construction", "threshold_met"])?;
    for r in &report.extremal {
        let param = match r.point {
            kkec_core::enumeration::SearchPoint::Order { n } => format!("n={n}"),
            kkec_core::enumeration::SearchPoint::Size { m } => format!("m={m}"),
        };
        w.write_record([
            r.k.to_string(),
            param,
            r.rho_max.map_or(String::new(), |x| format!("{x:.12}")),
            r.argmax.join(" "),
            r.matched_construction.clone().unwrap_or_default(),
            r.threshold_met.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_verify(
    workers: usize,
    config: SuiteConfig,
    out: Option<&PathBuf>,
    csv_path: Option<&PathBuf>,
) -> Result<bool> {
    let report = run_suite(&config, workers)?;
    let text = serde_json::to_string_pretty(&report)? + "\n";
    match out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    if let Some(path) = csv_path {
        write_csv(path, &report)?;
    }
    let s = report.summary;
    eprintln!(
        "suite {}: {} passed, {} failed, {} informational ({} ms)",
        report.suite, s.pass, s.fail, s.informational, report.run.duration_ms
    );
    for r in report.records.iter().filter(|r| r.status == kkec_core::verify::Status::Fail) {
        eprintln!("FAIL {} [{}]", r.check, r.anchor);
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    let workers = cli.workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if workers == 0 {
        bail!("--workers must be at least 1");
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
    pool.install(|| match &cli.command {
        Command::Rho { input, tol } => cmd_rho(input, *tol).map(|_| true),
        Command::Kappa { input, l } => cmd_kappa(input, l).map(|_| true),
        Command::CheckMinimal { input } => cmd_check_minimal(input).map(|_| true),
        Command::Build { family } => cmd_build(family).map(|_| true),
        Command::Enumerate { point, out } => cmd_enumerate(point, out).map(|_| true),
        Command::Verify { suite, k, range, seed, out, csv } => {
            let mut config = SuiteConfig::new(*suite);
            config.k = *k;
            config.range = range.clone();
            if let Some(seed) = seed {
                config.seed = *seed;
            }
            cmd_verify(workers, config, out.as_ref(), csv.as_ref())
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
