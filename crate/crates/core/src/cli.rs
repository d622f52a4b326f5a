//! Command-line front end.
//!
//! Exit codes: 0 on success (every analyzed record equivalent), 2 on usage or
//! input errors, 3 when an analyzed graph is not a character graph.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::degrees::{self, Corpus, DegreeMultiset, Family, RecordError};
use crate::graph::{self, build_character_graph, connected_components, PrimeGraph};
use crate::oracle::{self, EXHAUSTIVE_LIMIT};
use crate::theorem::{check_equivalence, TheoremReport, DEFAULT_ALPHA_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OBSTRUCTION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "chargraph",
    version,
    about = "Character degree graphs: generate, analyze, sweep and self-check"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit degree multisets for a group family as corpus records.
    Gen(GenArgs),
    /// Evaluate conditions (a), (b), (c) for every record of a corpus or an edge list.
    Analyze(AnalyzeArgs),
    /// Validate a corpus file record by record.
    Check(CheckArgs),
    /// Tabulate a family over a range of field sizes.
    Sweep(SweepArgs),
    /// Compare fast algorithms against brute force on small graphs.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Emit {
    Json,
    Table,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Corpus,
    Edges,
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long, conflicts_with_all = ["q_min", "q_max"])]
    pub q: Option<u64>,
    #[arg(long, requires = "q_max")]
    pub q_min: Option<u64>,
    #[arg(long, requires = "q_min")]
    pub q_max: Option<u64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Emit::Json])]
    pub emit: Vec<Emit>,
}

#[derive(Debug, clap::Args)]
pub struct AnalyzeArgs {
    /// Corpus (JSON lines) or edge-list file; `-` or absent reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Emit::Json])]
    pub emit: Vec<Emit>,
    #[arg(long, default_value_t = DEFAULT_ALPHA_CAP)]
    pub alpha_cap: u32,
}

#[derive(Debug, clap::Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "psl2")]
    pub family: Family,
    #[arg(long)]
    pub q_min: u64,
    #[arg(long)]
    pub q_max: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Emit::Table])]
    pub emit: Vec<Emit>,
    #[arg(long, default_value_t = DEFAULT_ALPHA_CAP)]
    pub alpha_cap: u32,
}

#[derive(Debug, clap::Args)]
pub struct OracleArgs {
    /// Exhaustive mode: every labelled graph on this many vertices.
    #[arg(long, default_value_t = 6)]
    pub max_vertices: usize,
    /// Random mode: number of graphs.
    #[arg(long)]
    pub random: Option<usize>,
    /// Random mode: vertex bound.
    #[arg(long, default_value_t = 10)]
    pub vertices: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

type CliResult = Result<i32, CliError>;

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            }
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(&args, out),
        Command::Analyze(args) => cmd_analyze(&args, out, err),
        Command::Check(args) => cmd_check(&args, out, err),
        Command::Sweep(args) => cmd_sweep(&args, out),
        Command::Oracle(args) => cmd_oracle(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

/// Runs `body` against the `--output` file, or `out` when absent.
fn with_output(path: Option<&Path>, out: &mut dyn Write, body: impl FnOnce(&mut dyn Write) -> CliResult) -> CliResult {
    match path {
        Some(p) => {
            let mut file =
                io::BufWriter::new(fs::File::create(p).map_err(|e| CliError::usage(format!("{}: {e}", p.display())))?);
            let code = body(&mut file)?;
            file.flush()?;
            Ok(code)
        }
        None => {
            let code = body(out)?;
            out.flush()?;
            Ok(code)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<(String, String), CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            let text = fs::read_to_string(p).map_err(|e| CliError::usage(format!("{}: {e}", p.display())))?;
            let stem = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".into());
            Ok((stem, text))
        }
        _ => Ok(("stdin".into(), io::read_to_string(io::stdin())?)),
    }
}

fn field_sizes(family: Family, q: Option<u64>, range: Option<(u64, u64)>) -> Result<Vec<u64>, CliError> {
    match (q, range) {
        (Some(q), _) => {
            family.generate(q).map_err(|e| CliError::usage(e.to_string()))?;
            Ok(vec![q])
        }
        (None, Some((lo, hi))) => {
            let qs: Vec<u64> = (lo..=hi).filter(|&q| family.accepts(q)).collect();
            if qs.is_empty() {
                return Err(CliError::usage(format!(
                    "no admissible {family} field sizes in [{lo}, {hi}]"
                )));
            }
            Ok(qs)
        }
        (None, None) => Err(CliError::usage("either --q or --q-min/--q-max is required")),
    }
}

fn sorted_emits(emit: &[Emit]) -> Vec<Emit> {
    let mut e = emit.to_vec();
    e.sort();
    e.dedup();
    e
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CliResult {
    let range = args.q_min.zip(args.q_max);
    let records: Vec<DegreeMultiset> = field_sizes(args.family, args.q, range)?
        .into_iter()
        .map(|q| args.family.generate(q).expect("field sizes are pre-validated"))
        .collect();
    let emits = sorted_emits(&args.emit);
    with_output(args.output.as_deref(), out, |w| {
        for d in &records {
            for emit in &emits {
                match emit {
                    Emit::Json => degrees::write_corpus(&mut *w, [d])?,
                    Emit::Table => writeln!(w, "{}", degree_row(d))?,
                    Emit::Dot => {
                        let g = build_character_graph(d).map_err(|e| CliError::usage(e.to_string()))?;
                        w.write_all(graph::pair_to_dot(&g).as_bytes())?;
                    }
                }
            }
        }
        Ok(EXIT_OK)
    })
}

fn degree_row(d: &DegreeMultiset) -> String {
    let degrees = d
        .entries()
        .iter()
        .map(|&(deg, m)| if m == 1 { deg.to_string() } else { format!("{deg}x{m}") })
        .collect::<Vec<_>>()
        .join(" ");
    let order = d.group_order().map_or("-".to_string(), |o| o.to_string());
    format!("{:<16} order {:<12} {}", d.name(), order, degrees)
}

/// What `analyze` works on: named graphs plus per-record input errors.
struct Workload {
    graphs: Vec<PrimeGraph>,
    errors: Vec<RecordError>,
}

fn looks_like_corpus(text: &str) -> bool {
    match text.lines().map(str::trim).find(|l| !l.is_empty()) {
        None => true,
        Some(l) => l.starts_with('{'),
    }
}

fn corpus_workload(corpus: Corpus) -> Workload {
    let mut errors = corpus.errors;
    let mut graphs = Vec::new();
    for (line, d) in &corpus.records {
        match build_character_graph(d) {
            Ok(g) => graphs.push((*line, g)),
            Err(e) => errors.push(RecordError {
                line: *line,
                message: e.to_string(),
            }),
        }
    }
    errors.sort_by_key(|e| e.line);
    Workload {
        graphs: graphs.into_iter().map(|(_, g)| g).collect(),
        errors,
    }
}

fn load_workload(args: &AnalyzeArgs) -> Result<Workload, CliError> {
    let (stem, text) = read_input(args.input.as_deref())?;
    let corpus = match args.format {
        InputFormat::Corpus => true,
        InputFormat::Edges => false,
        InputFormat::Auto => looks_like_corpus(&text),
    };
    if corpus {
        Ok(corpus_workload(degrees::read_corpus(BufReader::new(text.as_bytes()))?))
    } else {
        let g = graph::parse_edge_list(&stem, &text).map_err(|e| CliError::usage(e.to_string()))?;
        Ok(Workload {
            graphs: vec![g],
            errors: Vec::new(),
        })
    }
}

fn witness_cell(r: &TheoremReport) -> String {
    r.psl2_witness
        .as_ref()
        .map_or("-".into(), |w| format!("u={} alpha={} pi={:?}", w.u, w.alpha, w.pi))
}

fn report_row(r: &TheoremReport) -> String {
    let (a, b, c) = r.conditions();
    format!(
        "{:<20} |V|={:<3} |E|={:<4} a={:<5} b={:<5} c={:<5} equivalent={:<5} witness={}",
        r.name(),
        r.delta.len(),
        r.delta.edge_count(),
        a,
        b,
        c,
        r.equivalent,
        witness_cell(r)
    )
}

pub fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let work = load_workload(args)?;
    for e in &work.errors {
        writeln!(err, "error: {e}")?;
    }
    let reports: Vec<TheoremReport> = work
        .graphs
        .par_iter()
        .map(|g| check_equivalence(g, args.alpha_cap))
        .collect();
    let emits = sorted_emits(&args.emit);
    let obstruction = reports.iter().any(|r| !r.equivalent);
    with_output(args.output.as_deref(), out, |w| {
        for r in &reports {
            for emit in &emits {
                match emit {
                    Emit::Json => {
                        serde_json::to_writer(&mut *w, r).map_err(|e| CliError::usage(e.to_string()))?;
                        writeln!(w)?;
                    }
                    Emit::Table => writeln!(w, "{}", report_row(r))?,
                    Emit::Dot => w.write_all(graph::pair_to_dot(&r.delta).as_bytes())?,
                }
            }
        }
        Ok(EXIT_OK)
    })?;
    Ok(if !work.errors.is_empty() {
        EXIT_USAGE
    } else if obstruction {
        EXIT_OBSTRUCTION
    } else {
        EXIT_OK
    })
}

pub fn cmd_check(args: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (_, text) = read_input(args.input.as_deref())?;
    let corpus = degrees::read_corpus(BufReader::new(text.as_bytes()))?;
    for e in &corpus.errors {
        writeln!(err, "error: {e}")?;
    }
    with_output(args.output.as_deref(), out, |w| {
        for (line, d) in &corpus.records {
            writeln!(w, "line {line}: ok {}", degree_row(d))?;
        }
        writeln!(w, "{} valid, {} invalid", corpus.records.len(), corpus.errors.len())?;
        Ok(EXIT_OK)
    })?;
    Ok(if corpus.errors.is_empty() { EXIT_OK } else { EXIT_USAGE })
}

/// One row of a family sweep.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SweepRow {
    pub q: u64,
    pub components: usize,
    pub complement_bipartite: bool,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub witness: Option<(u64, u32)>,
}

pub fn sweep_rows(family: Family, qs: &[u64], alpha_cap: u32) -> Vec<SweepRow> {
    qs.par_iter()
        .map(|&q| {
            let d = family.generate(q).expect("field sizes are pre-validated");
            let g = build_character_graph(&d).expect("family graphs are small");
            let r = check_equivalence(&g, alpha_cap);
            SweepRow {
                q,
                components: connected_components(&g).len(),
                complement_bipartite: r.b.bipartite.is_bipartite(),
                a: r.a.holds,
                b: r.b.holds,
                c: r.c.holds,
                witness: r.psl2_witness.as_ref().map(|w| (w.u, w.alpha)),
            }
        })
        .collect()
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> CliResult {
    if args.q_min > args.q_max {
        return Err(CliError::usage(format!("empty range [{}, {}]", args.q_min, args.q_max)));
    }
    let qs = field_sizes(args.family, None, Some((args.q_min, args.q_max)))?;
    let rows = sweep_rows(args.family, &qs, args.alpha_cap);
    let emits = sorted_emits(&args.emit);
    with_output(args.output.as_deref(), out, |w| {
        for emit in &emits {
            match emit {
                Emit::Json => {
                    for row in &rows {
                        serde_json::to_writer(&mut *w, row).map_err(|e| CliError::usage(e.to_string()))?;
                        writeln!(w)?;
                    }
                }
                Emit::Table => {
                    writeln!(
                        w,
                        "{:<8} {:<10} {:<20} {:<6} {:<6} {:<6} witness",
                        "q", "components", "complement_bipartite", "a", "b", "c"
                    )?;
                    for row in &rows {
                        let witness = row
                            .witness
                            .map_or("-".into(), |(u, alpha)| format!("u={u} alpha={alpha}"));
                        writeln!(
                            w,
                            "{:<8} {:<10} {:<20} {:<6} {:<6} {:<6} {}",
                            row.q, row.components, row.complement_bipartite, row.a, row.b, row.c, witness
                        )?;
                    }
                }
                Emit::Dot => {
                    for &q in &qs {
                        let d = args.family.generate(q).expect("pre-validated");
                        let g = build_character_graph(&d).map_err(|e| CliError::usage(e.to_string()))?;
                        w.write_all(graph::pair_to_dot(&g).as_bytes())?;
                    }
                }
            }
        }
        Ok(EXIT_OK)
    })
}

pub fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write) -> CliResult {
    let (summary, heading) = match args.random {
        Some(count) => {
            if args.vertices > graph::MAX_VERTICES.min(12) {
                return Err(CliError::usage("--vertices must be at most 12"));
            }
            (
                oracle::run_random(count, args.vertices, args.seed),
                format!("random (seed {}, up to {} vertices)", args.seed, args.vertices),
            )
        }
        None => {
            if args.max_vertices > EXHAUSTIVE_LIMIT {
                return Err(CliError::usage(format!(
                    "--max-vertices must be at most {EXHAUSTIVE_LIMIT} in exhaustive mode"
                )));
            }
            (
                oracle::run_exhaustive(args.max_vertices),
                format!("exhaustive ({} vertices)", args.max_vertices),
            )
        }
    };
    out.write_all(summary.render(&heading).as_bytes())?;
    Ok(if summary.passed() { EXIT_OK } else { 1 })
}
