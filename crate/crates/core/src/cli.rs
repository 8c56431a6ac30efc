//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven in-process by tests; `main` only forwards the process handles.
//!
//! Exit codes: 0 success, 1 verification failed, 2 exception graph,
//! 3 parity mismatch, 4 parse or input error, 5 internal failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::connected::target_profile;
use crate::error::{Error, Result, Statement};
use crate::gen::{cycles, named, random_cubic};
use crate::general::{
    balanced_statement, decompose_balanced, decompose_traced, decompose_two_regular, two_regular_bound,
    DecompositionResult,
};
use crate::graph::{profile_with_degree, DegreeProfile, EdgeSubset, Graph};
use crate::io::{
    encode_graph6_string, format_ratio, parse_edge_list, parse_graph6, render_result, write_edge_list, Format,
    ResultDocument, TSV_HEADER,
};
use crate::oracle::{achievable_profiles, find_witness, min_max_deviation, DEFAULT_EDGE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_EXCEPTION: i32 = 2;
pub const EXIT_PARITY: i32 = 3;
pub const EXIT_INPUT: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

pub const EDGE_CAP_ENV: &str = "BALANCE_EDGE_CAP";

#[derive(Parser, Debug)]
#[command(name = "balance", version, about = "Degree-balanced spanning subgraphs of cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose each input graph and print one result per graph.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "balanced")]
        statement: StatementArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Check result documents against their graphs.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// JSON result documents, one per line, paired with the graphs in order.
        #[arg(long)]
        result: String,
    },
    /// Exhaustive profile enumeration.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Only ask about this profile, e.g. 1,2,1,2.
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<usize>>,
        /// Only report the least achievable maximum deviation.
        #[arg(long, conflicts_with = "profile")]
        min_deviation: bool,
        /// Largest edge count to enumerate (default: $BALANCE_EDGE_CAP or 26).
        #[arg(long)]
        edge_cap: Option<usize>,
    },
    /// Print graphs as graph6 lines or edge lists.
    Gen {
        #[arg(long, conflicts_with_all = ["random", "cycles"])]
        named: Option<String>,
        /// Random cubic graphs of this order.
        #[arg(long)]
        random: Option<usize>,
        /// Disjoint cycles with these lengths.
        #[arg(long, value_delimiter = ',', conflicts_with = "random")]
        cycles: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Graph i uses seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Decompose a corpus and print a TSV summary.
    Batch {
        #[command(flatten)]
        input: InputArgs,
        /// A statement, `balanced`, `two-regular`, or `all` for every
        /// statement matching each graph's order.
        #[arg(long, default_value = "all")]
        statement: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Print `-` in the ms column so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// File of graph6 lines or an edge list; `-` reads stdin.
    #[arg(conflicts_with = "named", required_unless_present = "named")]
    path: Option<String>,
    #[arg(long)]
    named: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StatementArg {
    Fixed(Statement),
    Balanced,
    TwoRegular,
}

impl FromStr for StatementArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "balanced" => Ok(StatementArg::Balanced),
            "two-regular" | "two_regular" => Ok(StatementArg::TwoRegular),
            other => Statement::from_str(other)
                .map(StatementArg::Fixed)
                .map_err(|_| format!("expected i, ii, iii, iv, balanced or two-regular, got {s:?}")),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

/// Exit code for a failed operation.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ExceptionGraph(_) => EXIT_EXCEPTION,
        Error::ParityMismatch { .. } => EXIT_PARITY,
        Error::Parse { .. }
        | Error::UnsupportedOrder(_)
        | Error::LoopEdge(_)
        | Error::DuplicateEdge(..)
        | Error::VertexOutOfRange { .. }
        | Error::NotRegular(_)
        | Error::NotConnected
        | Error::UnknownName(_)
        | Error::CapExceeded { .. }
        | Error::InvalidOrder(_)
        | Error::OddOrder(_)
        | Error::PartTooSmall(_) => EXIT_INPUT,
        _ => EXIT_INTERNAL,
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let mut ctx = Ctx { stdin, out, err };
    let code = match cli.command {
        Command::Decompose { input, statement, format } => ctx.decompose(&input, statement, format),
        Command::Verify { input, result } => ctx.verify(&input, &result),
        Command::Oracle { input, profile, min_deviation, edge_cap } => {
            ctx.oracle(&input, profile, min_deviation, edge_cap)
        }
        Command::Gen { named, random, cycles, count, seed, format } => {
            ctx.gen(named, random, cycles, count, seed, format)
        }
        Command::Batch { input, statement, jobs, no_timing } => ctx.batch(&input, &statement, jobs as usize, no_timing),
    };
    match code {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse { line: 0, msg: e.to_string() }
}

/// Graph6 lines unless the first non-blank line starts with a digit, in
/// which case the whole text is one edge list.
pub fn parse_graphs(text: &str, source: &str) -> Result<Vec<(String, Graph)>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => {
            Ok(vec![(source.to_string(), parse_edge_list(text)?)])
        }
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let g = parse_graph6(l.trim().as_bytes()).map_err(|e| match e {
                    Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
                    other => other,
                })?;
                Ok((format!("{source}:{}", i + 1), g))
            })
            .collect(),
    }
}

impl Ctx<'_> {
    fn read_text(&mut self, path: &str) -> Result<String> {
        let mut text = String::new();
        if path == "-" {
            self.stdin.read_to_string(&mut text).map_err(io_err)?;
        } else {
            text = std::fs::read_to_string(path)
                .map_err(|e| io_err(std::io::Error::new(e.kind(), format!("{path}: {e}"))))?;
        }
        Ok(text)
    }

    fn graphs(&mut self, input: &InputArgs) -> Result<Vec<(String, Graph)>> {
        if let Some(name) = &input.named {
            return Ok(vec![(name.clone(), named(name)?)]);
        }
        let path = input.path.as_deref().unwrap_or("-");
        let text = self.read_text(path)?;
        parse_graphs(&text, if path == "-" { "stdin" } else { path })
    }

    fn decompose(&mut self, input: &InputArgs, statement: StatementArg, format: FormatArg) -> Result<i32> {
        let graphs = self.graphs(input)?;
        let format = match format {
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
        };
        if matches!(format, Format::Tsv) {
            writeln!(self.out, "{TSV_HEADER}").map_err(io_err)?;
        }
        let mut code = EXIT_OK;
        for (name, g) in &graphs {
            match solve(g, statement) {
                Ok(r) => {
                    writeln!(self.out, "{}", render_result(&r.to_document(g, name), format)).map_err(io_err)?;
                }
                Err(e) => {
                    writeln!(self.err, "{name}: {e}").map_err(io_err)?;
                    if code == EXIT_OK {
                        code = exit_code(&e);
                    }
                }
            }
        }
        Ok(code)
    }

    fn verify(&mut self, input: &InputArgs, result: &str) -> Result<i32> {
        let graphs = self.graphs(input)?;
        let text = self.read_text(result)?;
        let docs: Vec<ResultDocument> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() }))
            .collect::<Result<_>>()?;
        if docs.len() != graphs.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} graphs but {} result documents",
                graphs.len(),
                docs.len()
            )));
        }
        let mut code = EXIT_OK;
        for ((name, g), doc) in graphs.iter().zip(&docs) {
            let problems = check_document(g, doc);
            if problems.is_empty() {
                writeln!(self.out, "PASS {}", doc.input_name).map_err(io_err)?;
            } else {
                code = EXIT_VERIFY_FAILED;
                writeln!(self.out, "FAIL {} (graph {name}): {}", doc.input_name, problems.join("; "))
                    .map_err(io_err)?;
            }
        }
        Ok(code)
    }

    fn oracle(
        &mut self,
        input: &InputArgs,
        profile: Option<Vec<usize>>,
        min_deviation: bool,
        edge_cap: Option<usize>,
    ) -> Result<i32> {
        let cap = match edge_cap {
            Some(c) => c,
            None => match std::env::var(EDGE_CAP_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse { line: 0, msg: format!("{EDGE_CAP_ENV} is not an integer: {v:?}") })?,
                Err(_) => DEFAULT_EDGE_CAP,
            },
        };
        for (name, g) in self.graphs(input)? {
            let doc = if min_deviation {
                json!({ "input_name": name, "min_max_deviation": format_ratio(&min_max_deviation(&g, cap)?) })
            } else if let Some(p) = &profile {
                let p = DegreeProfile::new(p.clone());
                let witness = find_witness(&g, &p, cap)?;
                json!({
                    "input_name": name,
                    "profile": p.counts(),
                    "achievable": witness.is_some(),
                    "witness": witness.map(|w| w.pairs(&g)),
                })
            } else {
                let report = achievable_profiles(&g, cap)?;
                let profiles: Vec<&[usize]> = report.achievable().map(DegreeProfile::counts).collect();
                json!({
                    "input_name": name,
                    "graph_order": report.graph_order,
                    "degree": report.degree,
                    "achievable_count": profiles.len(),
                    "achievable": profiles,
                    "min_max_deviation": format_ratio(&report.min_max_deviation),
                })
            };
            writeln!(self.out, "{doc}").map_err(io_err)?;
        }
        Ok(EXIT_OK)
    }

    fn gen(
        &mut self,
        name: Option<String>,
        random: Option<usize>,
        lengths: Option<Vec<usize>>,
        count: usize,
        seed: u64,
        format: GraphFormat,
    ) -> Result<i32> {
        let mut graphs = Vec::new();
        if let Some(name) = name {
            graphs.push(named(&name)?);
        } else if let Some(n) = random {
            for i in 0..count {
                graphs.push(random_cubic(n, seed.wrapping_add(i as u64))?);
            }
        } else if let Some(lengths) = lengths {
            graphs.push(cycles(&lengths)?);
        } else {
            return Err(Error::PreconditionViolated("gen needs --named, --random or --cycles".into()));
        }
        for g in &graphs {
            match format {
                GraphFormat::Graph6 => writeln!(self.out, "{}", encode_graph6_string(g)?),
                GraphFormat::EdgeList => write!(self.out, "{}", write_edge_list(g)),
            }
            .map_err(io_err)?;
        }
        Ok(EXIT_OK)
    }

    fn batch(&mut self, input: &InputArgs, statement: &str, jobs: usize, no_timing: bool) -> Result<i32> {
        let plan: Option<StatementArg> = match statement.to_ascii_lowercase().as_str() {
            "all" => None,
            s => Some(StatementArg::from_str(s).map_err(|msg| Error::Parse { line: 0, msg })?),
        };
        let graphs = self.graphs(input)?;
        let tasks: Vec<(usize, &str, &Graph, StatementArg)> = graphs
            .iter()
            .enumerate()
            .flat_map(|(i, (name, g))| {
                let list: Vec<StatementArg> = match plan {
                    Some(s) => vec![s],
                    None => Statement::for_order(g.order()).iter().map(|&s| StatementArg::Fixed(s)).collect(),
                };
                list.into_iter().map(move |s| (i, name.as_str(), g, s))
            })
            .collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InternalStuck(e.to_string()))?;
        let rows: Vec<Row> = pool.install(|| {
            tasks
                .par_iter()
                .map(|&(index, name, g, s)| {
                    let start = Instant::now();
                    let outcome = solve(g, s);
                    Row::new(index, name, g, s, outcome, start.elapsed().as_secs_f64() * 1e3)
                })
                .collect()
        });

        writeln!(self.out, "index\tinput_name\tn\tstatement\tstatus\tmax_deviation\tfallback_used\tms")
            .map_err(io_err)?;
        let mut tally = Tally::default();
        for row in &rows {
            tally.add(row);
            let ms = if no_timing { "-".to_string() } else { format!("{:.3}", row.ms) };
            writeln!(
                self.out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{ms}",
                row.index, row.name, row.n, row.statement, row.status, row.deviation, row.fallback
            )
            .map_err(io_err)?;
        }
        writeln!(
            self.out,
            "# summary graphs={} rows={} ok={} exceptions={} skipped={} failures={} fallbacks={}",
            graphs.len(),
            rows.len(),
            tally.ok,
            tally.exceptions,
            tally.skipped,
            tally.failures,
            tally.fallbacks
        )
        .map_err(io_err)?;
        Ok(if tally.failures > 0 { EXIT_INTERNAL } else { EXIT_OK })
    }
}

fn solve(g: &Graph, s: StatementArg) -> Result<DecompositionResult> {
    match s {
        StatementArg::Fixed(s) => decompose_traced(g, s),
        StatementArg::Balanced => decompose_balanced(g),
        StatementArg::TwoRegular => decompose_two_regular(g),
    }
}

fn label(s: StatementArg) -> String {
    match s {
        StatementArg::Fixed(s) => s.to_string(),
        StatementArg::Balanced => "BALANCED".into(),
        StatementArg::TwoRegular => "TWO_REGULAR".into(),
    }
}

struct Row {
    index: usize,
    name: String,
    n: usize,
    statement: String,
    status: String,
    deviation: String,
    fallback: bool,
    ms: f64,
}

impl Row {
    fn new(
        index: usize,
        name: &str,
        g: &Graph,
        s: StatementArg,
        outcome: Result<DecompositionResult>,
        ms: f64,
    ) -> Self {
        let (status, deviation, fallback) = match outcome {
            Ok(r) => ("ok".to_string(), format_ratio(&r.max_deviation), r.fallback_used),
            Err(Error::ExceptionGraph(k)) => (format!("exception:{k}"), "-".into(), false),
            Err(Error::ParityMismatch { .. }) => ("skipped:parity".into(), "-".into(), false),
            Err(e) => (format!("failed:{e}"), "-".into(), false),
        };
        Row { index, name: name.to_string(), n: g.order(), statement: label(s), status, deviation, fallback, ms }
    }
}

#[derive(Default)]
struct Tally {
    ok: usize,
    exceptions: usize,
    skipped: usize,
    failures: usize,
    fallbacks: usize,
}

impl Tally {
    fn add(&mut self, row: &Row) {
        match row.status.split(':').next() {
            Some("ok") => self.ok += 1,
            Some("exception") => self.exceptions += 1,
            Some("skipped") => self.skipped += 1,
            _ => self.failures += 1,
        }
        self.fallbacks += row.fallback as usize;
    }
}

/// Everything wrong with `doc` as a decomposition of `g`; empty when valid.
pub fn check_document(g: &Graph, doc: &ResultDocument) -> Vec<String> {
    let mut problems = Vec::new();
    if doc.n != g.order() {
        problems.push(format!("size mismatch: document has n={}, graph has {} vertices", doc.n, g.order()));
        return problems;
    }
    let Some(d) = g.regular_degree() else {
        problems.push("host graph is not regular".into());
        return problems;
    };
    let Some(subset) = EdgeSubset::from_pairs(g, &doc.subgraph_edges) else {
        let missing: Vec<String> = doc
            .subgraph_edges
            .iter()
            .filter(|&&(u, v)| u >= g.order() || v >= g.order() || !g.has_edge(u, v))
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        problems.push(format!("edges not in the graph: {}", missing.join(",")));
        return problems;
    };
    if subset.count() != doc.subgraph_edges.len() {
        problems.push("repeated edges in subgraph_edges".into());
    }
    let actual = match profile_with_degree(g, &subset, d) {
        Ok(p) => p,
        Err(e) => {
            problems.push(e.to_string());
            return problems;
        }
    };
    if actual.counts() != doc.achieved_profile.as_slice() {
        let mut diff = String::new();
        for k in (0..=d).rev() {
            let claimed = doc.achieved_profile.get(d - k).copied().unwrap_or(0);
            if claimed != actual.count(k) {
                let _ = write!(diff, " m(H,{k}) claimed {claimed} found {}", actual.count(k));
            }
        }
        problems.push(format!("degree counts differ:{diff}"));
    }
    if doc.target_profile != doc.achieved_profile {
        problems.push(format!(
            "achieved_profile {:?} differs from target_profile {:?}",
            doc.achieved_profile, doc.target_profile
        ));
    }
    if let Err(msg) = check_target(g, doc) {
        problems.push(msg);
    }
    let dev = format_ratio(&actual.max_deviation());
    if doc.max_deviation != dev {
        problems.push(format!("max_deviation {} but edges give {dev}", doc.max_deviation));
    }
    problems
}

fn check_target(g: &Graph, doc: &ResultDocument) -> std::result::Result<(), String> {
    let expected = match doc.statement.as_str() {
        "BALANCED" => {
            let (s, _) = balanced_statement(g).map_err(|e| e.to_string())?;
            target_profile(g.order(), s).map_err(|e| e.to_string())?
        }
        "TWO_REGULAR" => {
            let p = DegreeProfile::new(doc.target_profile.clone());
            let fits = p.counts().len() == 3
                && p.order() == g.order()
                && p.count(1).is_multiple_of(2)
                && p.max_deviation() <= two_regular_bound(g.order());
            return if fits { Ok(()) } else { Err(format!("target {p} is outside the 2-regular bound")) };
        }
        other => {
            let s = Statement::from_str(other).map_err(|_| format!("unknown statement {other:?}"))?;
            target_profile(g.order(), s).map_err(|e| e.to_string())?
        }
    };
    if expected.counts() != doc.target_profile.as_slice() {
        return Err(format!("target_profile {:?} but statement asks for {expected}", doc.target_profile));
    }
    Ok(())
}
