//! Command-line front end. [`run`] parses arguments, sizes the thread pool and
//! dispatches to the library; it returns the process exit code.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::constructions::{ConstructionSpec, Family};
use crate::experiments::{self, SweepFamily};
use crate::graph::{parse_graph6, to_graph6, EdgeListJson};
use crate::indices::{IndexKind, IndexReport};
use crate::search::{self, GraphClass};
use crate::verify::{self, Suite, SuiteReport};
use crate::{Error, Graph, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "periscope", version, about = "Distance-based graph indices, extremal constructions and exhaustive search")]
struct Cli {
    /// Worker threads (1 runs sequentially).
    #[arg(long, global = true, env = "PERISCOPE_THREADS", value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    /// Seed for randomized experiments.
    #[arg(long, global = true, default_value_t = verify::MONTE_CARLO_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute indices of one or more graphs.
    Compute(ComputeArgs),
    /// Build a graph from a named family.
    Generate(GenerateArgs),
    /// Maximize an index over a graph class.
    Search(SearchArgs),
    /// Run an experiment.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// Inline graph6 string.
    #[arg(long, group = "source")]
    g6: Option<String>,
    /// File with graph6 lines or an edge-list JSON object; "-" reads stdin.
    #[arg(long, group = "source")]
    input: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    G6,
    Json,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    /// Comma-separated indices (peri, eperi, espr, mo, mo_star, nt, irr); all by default.
    #[arg(long, value_delimiter = ',')]
    indices: Vec<String>,
    /// Include per-vertex, per-edge and per-pair contributions (JSON only).
    #[arg(long)]
    breakdown: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long)]
    family: String,
    /// Comma-separated integer parameters.
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
    #[arg(long, value_enum, default_value_t = GraphFormat::G6)]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// trees, graphs, bipartite or diameter:D
    #[arg(long)]
    class: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    index: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ExperimentCommand {
    /// Index-to-power ratios along a construction family.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mean irregularity of G(n, p) against its asymptotic prediction.
    Montecarlo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = verify::MONTE_CARLO_TRIALS)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ultra NT-balance of Cartesian products of ultra NT-balanced graphs.
    UltraClosure {
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    suite: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 on input errors, 2 when a verification suite fails.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let outcome = match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build()
            .map_err(|e| Error::param(e.to_string()))
            .and_then(|pool| pool.install(|| dispatch(&cli))),
        None => dispatch(&cli),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Compute(a) => compute(a).map(|_| EXIT_OK),
        Command::Generate(a) => generate(a).map(|_| EXIT_OK),
        Command::Search(a) => search_cmd(a).map(|_| EXIT_OK),
        Command::Experiment(e) => experiment(e, cli.seed).map(|_| EXIT_OK),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Pretty JSON with sorted keys.
fn to_json_text<T: Serialize>(v: &T) -> Result<String> {
    let value: Value = serde_json::to_value(v)?;
    Ok(serde_json::to_string_pretty(&value)?)
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::param(e.to_string());
    w.write_record(header).map_err(csv_err)?;
    for r in rows {
        w.write_record(r).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::param(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn table_text(header: &[String], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(String::len).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header);
    for r in rows {
        out.push('\n');
        out.push_str(&line(r));
    }
    out
}

fn tabular(format: ReportFormat, header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    match format {
        ReportFormat::Csv => csv_text(&header, rows),
        _ => Ok(table_text(&header, rows)),
    }
}

/// Parses graph6 lines or one edge-list JSON object.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let t = text.trim();
    if t.starts_with('{') {
        let json: EdgeListJson = serde_json::from_str(t)?;
        return Ok(vec![Graph::from_json(&json)?]);
    }
    let graphs = t
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect::<Result<Vec<_>>>()?;
    if graphs.is_empty() {
        return Err(Error::Graph6("no graph in input".into()));
    }
    Ok(graphs)
}

fn read_source(s: &Source) -> Result<Vec<Graph>> {
    if let Some(g6) = &s.g6 {
        return Ok(vec![parse_graph6(g6)?]);
    }
    let path = s.input.as_deref().expect("clap enforces one source");
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path)?
    };
    parse_graphs(&text)
}

fn parse_indices(names: &[String]) -> Result<Vec<IndexKind>> {
    if names.is_empty() {
        return Ok(IndexKind::ALL.to_vec());
    }
    names.iter().map(|s| s.trim().parse()).collect()
}

fn compute(a: &ComputeArgs) -> Result<()> {
    let kinds = parse_indices(&a.indices)?;
    let graphs = read_source(&a.source)?;
    let breakdown = a.breakdown && a.format == ReportFormat::Json;
    let reports = graphs
        .iter()
        .map(|g| IndexReport::compute(g, breakdown))
        .collect::<Result<Vec<_>>>()?;
    let text = match a.format {
        ReportFormat::Json => {
            let mut values: Vec<Value> = reports.iter().map(|r| r.to_json(&kinds)).collect();
            if values.len() == 1 {
                serde_json::to_string_pretty(&values.remove(0))?
            } else {
                serde_json::to_string_pretty(&values)?
            }
        }
        f => {
            let mut header = vec!["graph6", "n"];
            header.extend(kinds.iter().map(|k| k.name()));
            let rows: Vec<Vec<String>> = graphs
                .iter()
                .zip(&reports)
                .map(|(g, r)| {
                    let mut row = vec![to_graph6(g), r.n.to_string()];
                    row.extend(kinds.iter().map(|&k| r.get(k).to_string()));
                    row
                })
                .collect();
            tabular(f, &header, &rows)?
        }
    };
    emit(&a.out, &text)
}

fn generate(a: &GenerateArgs) -> Result<()> {
    let family: Family = a.family.parse()?;
    let g = ConstructionSpec::new(family, a.params.clone()).build()?;
    let text = match a.format {
        GraphFormat::G6 => to_graph6(&g),
        GraphFormat::Json => to_json_text(&g.to_json())?,
    };
    emit(&a.out, &text)
}

fn search_cmd(a: &SearchArgs) -> Result<()> {
    let class: GraphClass = a.class.parse()?;
    let index: IndexKind = a.index.parse()?;
    let res = search::maximize_index(a.n, class, index)?;
    let text = match a.format {
        ReportFormat::Json => to_json_text(&serde_json::json!({
            "n": res.n,
            "class": res.class.to_string(),
            "index": res.index.name(),
            "max_value": res.max_value,
            "witnesses": res.witnesses,
            "enumerated_count": res.enumerated_count,
        }))?,
        f => {
            let rows: Vec<Vec<String>> = res
                .witnesses
                .iter()
                .map(|w| vec![res.class.to_string(), res.n.to_string(), res.index.name().into(), res.max_value.to_string(), w.clone()])
                .collect();
            tabular(f, &["class", "n", "index", "max_value", "witness"], &rows)?
        }
    };
    emit(&a.out, &text)
}

fn experiment(e: &ExperimentCommand, seed: u64) -> Result<()> {
    match e {
        ExperimentCommand::Sweep { family, params, format, out } => {
            let family: SweepFamily = family.parse()?;
            let rep = experiments::ratio_sweep(family, params)?;
            let text = match format {
                ReportFormat::Json => to_json_text(&rep)?,
                ReportFormat::Csv => rep.to_csv()?,
                ReportFormat::Table => {
                    let rows: Vec<Vec<String>> = rep
                        .rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.param.to_string(),
                                r.n.to_string(),
                                r.value.to_string(),
                                format!("{:.6}", r.ratio),
                                format!("{:.6}", r.target),
                            ]
                        })
                        .collect();
                    table_text(
                        &["param", "n", "value", "ratio", "target"].map(String::from),
                        &rows,
                    )
                }
            };
            emit(out, &text)
        }
        ExperimentCommand::Montecarlo { n, p, trials, format, out } => {
            let rep = experiments::monte_carlo_irr(*n, *p, *trials, seed)?;
            let text = match format {
                ReportFormat::Json => to_json_text(&rep)?,
                f => tabular(
                    *f,
                    &["n", "p", "trials", "seed", "sample_mean", "predicted", "relative_error"],
                    &[vec![
                        rep.n.to_string(),
                        rep.p.to_string(),
                        rep.trials.to_string(),
                        rep.seed.to_string(),
                        rep.sample_mean.to_string(),
                        rep.predicted.to_string(),
                        rep.relative_error.to_string(),
                    ]],
                )?,
            };
            emit(out, &text)
        }
        ExperimentCommand::UltraClosure { format, out } => {
            let cases = verify::closure_cases()?;
            let pairs: Vec<(Graph, Graph)> = cases.iter().map(|(_, g, h)| (g.clone(), h.clone())).collect();
            let rows = experiments::verify_ultra_closure(&pairs)?;
            let text = match format {
                ReportFormat::Json => {
                    let named: Vec<Value> = cases
                        .iter()
                        .zip(&rows)
                        .map(|((name, ..), row)| {
                            let mut v = serde_json::to_value(row)?;
                            v["product"] = name.clone().into();
                            Ok(v)
                        })
                        .collect::<Result<_>>()?;
                    to_json_text(&named)?
                }
                f => tabular(
                    *f,
                    &["product", "n", "ultra", "nt", "regular"],
                    &cases
                        .iter()
                        .zip(&rows)
                        .map(|((name, ..), r)| {
                            vec![name.clone(), r.n.to_string(), r.ultra.to_string(), r.nt.to_string(), r.regular.to_string()]
                        })
                        .collect::<Vec<_>>(),
                )?,
            };
            emit(out, &text)
        }
    }
}

fn verify_cmd(a: &VerifyArgs) -> Result<i32> {
    let suites: Vec<Suite> = match &a.suite {
        Some(s) => vec![s.parse()?],
        None => Suite::ALL.to_vec(),
    };
    let reports = suites.iter().map(|s| s.run()).collect::<Result<Vec<SuiteReport>>>()?;
    let pass = reports.iter().all(SuiteReport::pass);
    let text = match a.format {
        ReportFormat::Json => to_json_text(&reports)?,
        ReportFormat::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |c| {
                        vec![r.suite.to_string(), c.label.clone(), if c.pass { "PASS" } else { "FAIL" }.into(), c.detail.clone()]
                    })
                })
                .collect();
            tabular(ReportFormat::Csv, &["suite", "check", "result", "detail"], &rows)?
        }
        ReportFormat::Table => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            s.push_str(if pass { "overall PASS" } else { "overall FAIL" });
            s
        }
    };
    emit(&a.out, &text)?;
    Ok(if pass { EXIT_OK } else { EXIT_VERIFY })
}
