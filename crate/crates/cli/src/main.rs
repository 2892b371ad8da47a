use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use thiserror::Error;

use geodex::families::DEFAULT_VERTEX_CAP;
use geodex::golden::{check_row, RowCheck, GOLDEN_ROWS};
use geodex::io::{
    analyze, analyze_graph, family_usage, read_graphs, tsv_table, AnalyzeError, AnalyzeOptions,
    FileFormat, GraphSource, ReportDocument, SourceError,
};

const CAP_ENV: &str = "GEODEX_CAP";
const SUMMARY_NAME: &str = "summary.tsv";

/// Exit statuses.
const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "geodex", version, about = "Distance and geodesic transitivity of graphs")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Print JSON reports.
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Print a TSV summary.
    #[arg(long, global = true)]
    tsv: bool,
    /// Cross-check levels and group orders by brute force where small enough.
    #[arg(long, global = true)]
    oracle: bool,
    /// Largest graph any family constructor may build. Overrides GEODEX_CAP.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Check every geodesic level even after b_s <= 1.
    #[arg(long, global = true)]
    no_early_exit: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named family and classify it.
    #[command(after_help = "Run `geodex family --list` for every family and its parameters.")]
    Family {
        /// Family name, e.g. paley, hamming, odd.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// Positional integer parameters.
        params: Vec<String>,
        /// List the families and their parameters.
        #[arg(long)]
        list: bool,
    },
    /// Classify every graph in a graph6 or adjacency-matrix file.
    File {
        path: PathBuf,
        /// Input format; inferred from the extension or content when absent.
        #[arg(long, value_parser = parse_format)]
        format: Option<FileFormat>,
    },
    /// Classify every file in a directory, writing one JSON report per graph and a summary.
    Batch {
        dir: PathBuf,
        /// Output directory; defaults to <DIR>/reports.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        format: Option<FileFormat>,
    },
    /// Reproduce the built-in reference table.
    Selftest,
}

fn parse_format(s: &str) -> Result<FileFormat, String> {
    s.parse()
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{CAP_ENV} must be a positive integer, got {0:?}")]
    BadCapEnv(String),
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Analyze(#[from] AnalyzeError),
    #[error("{path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |err| CliError::Io {
        path: path.to_path_buf(),
        err,
    }
}

struct Context {
    opts: GlobalOpts,
    cap: usize,
    analyze: AnalyzeOptions,
}

impl Context {
    fn new(opts: GlobalOpts) -> Result<Context, CliError> {
        let cap = match (opts.cap, std::env::var(CAP_ENV)) {
            (Some(c), _) => c,
            (None, Ok(v)) => v
                .trim()
                .parse()
                .ok()
                .filter(|&c| c > 0)
                .ok_or(CliError::BadCapEnv(v))?,
            (None, Err(_)) => DEFAULT_VERTEX_CAP,
        };
        let analyze = AnalyzeOptions {
            early_exit: !opts.no_early_exit,
            oracle: opts.oracle,
            ..AnalyzeOptions::default()
        };
        Ok(Context { opts, cap, analyze })
    }

    fn emit(&self, docs: &[ReportDocument]) {
        let mut out = std::io::stdout().lock();
        let text = if self.opts.json {
            let text = match docs {
                [one] => serde_json::to_string_pretty(one),
                many => serde_json::to_string_pretty(many),
            };
            text.expect("reports serialize") + "\n"
        } else if self.opts.tsv {
            tsv_table(docs)
        } else {
            docs.iter().map(human).collect::<Vec<_>>().join("\n")
        };
        // a closed pipe is not an error worth reporting
        let _ = out.write_all(text.as_bytes());
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn human(doc: &ReportDocument) -> String {
    let r = &doc.report;
    let mut s = format!("{}\n", doc.source);
    let mut line = |k: &str, v: String| s.push_str(&format!("  {k:<22}{v}\n"));
    line("vertices", r.n.to_string());
    line("valency", r.valency.map_or("irregular".into(), |k| k.to_string()));
    line(
        "intersection array",
        r.intersection_array
            .as_ref()
            .map_or("not distance regular".into(), |a| a.to_string()),
    );
    line("(d, g, s)", r.dgs());
    line("|Aut|", r.aut_order.to_string());
    line("|A_u|", r.stabilizer_order.to_string());
    line("geodesic level", format!("{} of {}", r.geodesic_level, r.diameter));
    line("vertex transitive", yes_no(r.vertex_transitive).into());
    line("distance transitive", yes_no(r.dt).into());
    line("geodesic transitive", yes_no(r.gt).into());
    if let Some(d) = r.divisibility {
        line("divisibility", if d { "holds" } else { "FAILS" }.into());
    }
    if let Some(o) = &doc.oracle {
        line(
            "oracle",
            format!(
                "{} (geodesic level {}, |Aut| {})",
                if o.agrees { "agrees" } else { "DISAGREES" },
                o.geodesic_level.map_or("skipped".into(), |l| l.to_string()),
                o.aut_order.map_or("skipped".into(), |a| a.to_string()),
            ),
        );
    }
    let t = &doc.timings;
    line(
        "time (ms)",
        format!(
            "construct {:.1}, aut {:.1}, classify {:.1}",
            t.construction_ms, t.aut_ms, t.classify_ms
        ),
    );
    for w in &doc.warnings {
        line("warning", w.clone());
    }
    s
}

fn verdict(docs: &[ReportDocument]) -> u8 {
    if docs.iter().all(ReportDocument::oracle_agrees) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn run_family(ctx: &Context, name: &str, params: &[String]) -> Result<u8, CliError> {
    let source = GraphSource::parse_family(name, params)?;
    let doc = analyze(&source, ctx.cap, ctx.analyze)?;
    ctx.emit(std::slice::from_ref(&doc));
    Ok(verdict(&[doc]))
}

/// One source per graph in the file; ids carry an index only for multi-graph files.
fn file_sources(path: &Path, format: Option<FileFormat>) -> Result<Vec<(GraphSource, geodex::Graph)>, CliError> {
    let bytes = fs::read(path).map_err(io_err(path))?;
    let format = format.unwrap_or_else(|| FileFormat::infer(path, &bytes));
    let graphs = read_graphs(path, Some(format))?;
    let many = graphs.len() > 1;
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| (GraphSource::file(path, format, many.then_some(i)), g))
        .collect())
}

fn classify_file_graph(
    ctx: &Context,
    source: &GraphSource,
    g: &geodex::Graph,
) -> Result<ReportDocument, AnalyzeError> {
    analyze_graph(&source.id(), source.provenance(), g, 0.0, source.warnings(), ctx.analyze)
}

fn run_file(ctx: &Context, path: &Path, format: Option<FileFormat>) -> Result<u8, CliError> {
    let start = Instant::now();
    let sources = file_sources(path, format)?;
    let read_ms = start.elapsed().as_secs_f64() * 1e3 / sources.len() as f64;
    let docs = sources
        .par_iter()
        .map(|(s, g)| {
            classify_file_graph(ctx, s, g).map(|mut d| {
                d.timings.construction_ms = read_ms;
                d
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    ctx.emit(&docs);
    Ok(verdict(&docs))
}

/// `<stem>.json` or `<stem>_<index>.json`, restricted to a portable character set.
fn report_name(path: &Path, index: Option<usize>) -> String {
    let stem: String = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || "-_.".contains(c) { c } else { '_' })
        .collect();
    match index {
        Some(i) => format!("{stem}_{i}.json"),
        None => format!("{stem}.json"),
    }
}

/// Writes through a temporary sibling and a rename, so readers never see a partial file.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = path.with_file_name(format!(".{name}.tmp"));
    fs::write(&tmp, contents).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

fn run_batch(
    ctx: &Context,
    dir: &Path,
    out: Option<PathBuf>,
    format: Option<FileFormat>,
) -> Result<u8, CliError> {
    let out = out.unwrap_or_else(|| dir.join("reports"));
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io_err(dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .filter(|p| !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
        .collect();
    files.sort();
    fs::create_dir_all(&out).map_err(io_err(&out))?;

    let mut failures = 0usize;
    let mut jobs = Vec::new();
    for f in &files {
        match file_sources(f, format) {
            Ok(sources) => jobs.extend(sources),
            Err(e) => {
                eprintln!("error: {e}");
                failures += 1;
            }
        }
    }
    let results: Vec<Result<ReportDocument, CliError>> = jobs
        .par_iter()
        .map(|(source, g)| {
            let doc = classify_file_graph(ctx, source, g)?;
            let geodex::io::SourceKind::File { path, index, .. } = &source.kind else {
                unreachable!("batch sources are files")
            };
            write_atomic(&out.join(report_name(path, *index)), &(doc.to_json() + "\n"))?;
            Ok(doc)
        })
        .collect();
    let mut docs = Vec::new();
    for r in results {
        match r {
            Ok(d) => docs.push(d),
            Err(e) => {
                eprintln!("error: {e}");
                failures += 1;
            }
        }
    }
    let summary = out.join(SUMMARY_NAME);
    write_atomic(&summary, &tsv_table(&docs))?;
    if ctx.opts.json || ctx.opts.tsv {
        ctx.emit(&docs);
    } else {
        println!(
            "classified {} graph(s) from {} file(s), {} error(s); summary in {}",
            docs.len(),
            files.len(),
            failures,
            summary.display()
        );
    }
    Ok(if failures > 0 {
        EXIT_INPUT
    } else {
        verdict(&docs)
    })
}

fn run_selftest(ctx: &Context) -> u8 {
    let checks: Vec<RowCheck> = GOLDEN_ROWS
        .par_iter()
        .map(|row| check_row(row, ctx.cap.max(DEFAULT_VERTEX_CAP), ctx.analyze))
        .collect();
    let failed = checks.iter().filter(|c| !c.passed()).count();
    if ctx.opts.json || ctx.opts.tsv {
        let docs: Vec<ReportDocument> = checks.iter().filter_map(|c| c.document.clone()).collect();
        ctx.emit(&docs);
    }
    for c in &checks {
        if c.passed() {
            eprintln!("PASS  {:<16} {}", c.row.label, c.row.source);
        } else {
            eprintln!("FAIL  {:<16} {}: {}", c.row.label, c.row.source, c.mismatches.join("; "));
        }
    }
    eprintln!("{} of {} reference rows reproduced", checks.len() - failed, checks.len());
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let ctx = Context::new(cli.opts)?;
    match cli.command {
        Command::Family { list: true, .. } => {
            println!("{}", family_usage());
            Ok(EXIT_OK)
        }
        Command::Family { name, params, .. } => {
            run_family(&ctx, name.as_deref().unwrap_or_default(), &params)
        }
        Command::File { path, format } => run_file(&ctx, &path, format),
        Command::Batch { dir, out, format } => run_batch(&ctx, &dir, out, format),
        Command::Selftest => Ok(run_selftest(&ctx)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn report_names_are_portable() {
        assert_eq!(report_name(Path::new("/a/b c.g6"), None), "b_c.g6.json");
        assert_eq!(report_name(Path::new("x.g6"), Some(3)), "x.g6_3.json");
    }
}
