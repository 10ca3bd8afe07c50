//! Command-line front end. Exit codes: 0 success, 1 a verification or
//! axiom check failed, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::cyclic::Side;
use crate::dot::export_dot;
use crate::error::Error;
use crate::golden::{verify_paper, PaperEvidence};
use crate::report::{report_json, JsonReport, JsonTwin};
use crate::ring::RingCtx;
use crate::search::{SearchOptions, DEFAULT_BUDGET};
use crate::snowflake::{analyze, classify, twin_compare, ClassificationReport, Domain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ternions", version, about = "Free cyclic submodules over the ring of ternions")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest number of tuples an exhaustive run may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Prime order of the base field.
    #[arg(long)]
    q: u32,
    /// Module rank; tuples have n+1 entries.
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value = "left")]
    side: Side,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the addition and multiplication tables.
    Tables {
        #[arg(long)]
        q: u32,
        /// Use the 0-7 labels (q = 2 only).
        #[arg(long)]
        paper_labels: bool,
    },
    /// Classify every tuple and list the free submodules of non-unimodular generators.
    Classify(RunArgs),
    /// Build the snowflake incidence structure.
    Snowflake {
        #[command(flatten)]
        run: RunArgs,
        /// Write the incidence graph in DOT format here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Extract the radical core and check the plane axioms.
    Core(RunArgs),
    /// Compare the left and right snowflakes.
    Twin {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Replay the reference facts for the order-eight ring.
    VerifyPaper,
}

enum Failure {
    Usage(String),
    Check(String),
    ClosedPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateCore { .. } => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::ClosedPipe;
        }
        Failure::Usage(e.to_string())
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, path: &Path, bytes: &[u8]) -> Result<(), Failure> {
        if path == Path::new("-") {
            self.out.write_all(bytes)?;
        } else {
            fs::write(path, bytes).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

/// Parses `argv` (program name first) and runs the command against the process streams.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run_cli`], with explicit output and error streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match execute(cli, &mut Io { out }) {
        Ok(()) | Err(Failure::ClosedPipe) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_FAILED_CHECK
        }
    }
}

fn options(cli: &Cli) -> Result<SearchOptions, Failure> {
    if cli.threads == Some(0) {
        return Err(Failure::Usage("--threads must be at least 1".into()));
    }
    Ok(SearchOptions { threads: cli.threads, budget: cli.budget })
}

fn summary(io: &mut Io<'_>, r: &ClassificationReport) -> std::io::Result<()> {
    let c = &r.counts;
    writeln!(io.out, "q={} n={} side={}", r.q, r.n, r.side)?;
    writeln!(io.out, "tuples: {}", c.total)?;
    writeln!(io.out, "unimodular: {}", c.unimodular)?;
    writeln!(io.out, "non-unimodular, not free: {}", c.nonunimodular_nonfree)?;
    writeln!(io.out, "non-unimodular, free: {}", c.nonunimodular_free)?;
    writeln!(io.out, "distinct submodules: {}", r.distinct_submodules)?;
    writeln!(io.out, "generators in home ideal: {}", r.generators_in_home_ideal())?;
    writeln!(io.out, "union equals ideal power: {}", r.union_equals_ideal_power)?;
    Ok(())
}

fn execute(cli: Cli, io: &mut Io<'_>) -> Result<(), Failure> {
    let opts = options(&cli)?;
    match cli.command {
        Command::Tables { q, paper_labels } => tables(io, q, paper_labels),
        Command::Classify(run) => {
            let ring = RingCtx::new(run.q)?;
            let c = classify(&ring, run.n, run.side, Domain::All, &opts)?;
            if let Some(path) = &run.json {
                io.emit(path, &report_json(&JsonReport::classification(&c)))?;
            }
            if run.json.as_deref() != Some(Path::new("-")) {
                summary(io, &c.report)?;
            }
            Ok(())
        }
        Command::Snowflake { run, dot } => {
            let ring = RingCtx::new(run.q)?;
            let a = analyze(&ring, run.n, run.side, &opts)?;
            if let Some(path) = &run.json {
                io.emit(path, &report_json(&JsonReport::snowflake(&a)))?;
            }
            if let Some(path) = &dot {
                io.emit(path, export_dot(&a.snowflake, &a.core).as_bytes())?;
            }
            let to_stdout = [run.json.as_deref(), dot.as_deref()].contains(&Some(Path::new("-")));
            if !to_stdout {
                summary(io, &a.report)?;
                let hist: Vec<String> =
                    a.snowflake.histogram.iter().rev().map(|(d, c)| format!("{d}:{c}")).collect();
                writeln!(io.out, "degree histogram: {}", hist.join(" "))?;
                writeln!(io.out, "zero tuple degree: {}", a.snowflake.zero_degree)?;
            }
            Ok(())
        }
        Command::Core(run) => {
            let ring = RingCtx::new(run.q)?;
            let a = analyze(&ring, run.n, run.side, &opts)?;
            if let Some(path) = &run.json {
                io.emit(path, &report_json(&JsonReport::core(&a)))?;
            }
            let core = &a.core;
            if run.json.as_deref() != Some(Path::new("-")) {
                writeln!(io.out, "q={} n={} side={}", run.q, run.n, run.side)?;
                writeln!(io.out, "core points: {}", core.points.len())?;
                writeln!(io.out, "core lines: {}", core.lines.len())?;
                let mult: Vec<String> =
                    core.multiplicity_histogram().iter().map(|(m, c)| format!("{c}x{m}")).collect();
                writeln!(io.out, "line multiplicities: {}", mult.join(" "))?;
                match core.verdict.order {
                    Some(order) => writeln!(io.out, "projective plane of order {order}")?,
                    None => writeln!(io.out, "not a projective plane of order {}", run.q)?,
                }
            }
            if run.n == 2 && !core.verdict.is_projective_plane {
                let why = core.verdict.failures.first().map(|f| f.to_string()).unwrap_or_default();
                return Err(Failure::Check(format!("plane axioms fail: {why}")));
            }
            Ok(())
        }
        Command::Twin { q, n, json } => {
            let ring = RingCtx::new(q)?;
            let t = twin_compare(&ring, n, &opts)?;
            if let Some(path) = &json {
                io.emit(path, &report_json(&JsonTwin::new(&t)))?;
            }
            if json.as_deref() != Some(Path::new("-")) {
                writeln!(io.out, "q={q} n={n}")?;
                writeln!(io.out, "histograms equal: {}", t.histograms_equal)?;
                writeln!(io.out, "core points equal: {}", t.core_points_equal)?;
                writeln!(io.out, "core lines equal: {}", t.core_lines_equal)?;
                writeln!(io.out, "transpose duality: {}", t.transpose_duality)?;
            }
            if !t.all_equal() {
                return Err(Failure::Check("left and right snowflakes differ".into()));
            }
            Ok(())
        }
        Command::VerifyPaper => {
            let ev = PaperEvidence::gather(&opts)?;
            let v = verify_paper(&ev);
            for c in &v.checks {
                writeln!(io.out, "{c}")?;
            }
            writeln!(io.out, "{}/{} checks passed", v.passed_count(), v.checks.len())?;
            match v.first_failure() {
                Some(c) => Err(Failure::Check(format!("({}) {}: {}", c.id, c.name, c.detail))),
                None => Ok(()),
            }
        }
    }
}

fn tables(io: &mut Io<'_>, q: u32, labels: bool) -> Result<(), Failure> {
    let ring = RingCtx::new(q)?;
    if labels {
        let (add, mul) = ring.paper_label_tables()?;
        for (sym, table) in [("+", add), ("x", mul)] {
            writeln!(io.out, "{sym} | 0 1 2 3 4 5 6 7")?;
            writeln!(io.out, "--+----------------")?;
            for (i, row) in table.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                writeln!(io.out, "{i} | {}", cells.join(" "))?;
            }
            writeln!(io.out)?;
        }
        return Ok(());
    }
    let t = ring.tables();
    let width = (t.order - 1).to_string().len();
    writeln!(io.out, "elements (code: a b c):")?;
    for (code, e) in ring.elements().iter().enumerate() {
        writeln!(io.out, "{code:>width$}: {} {} {}", e.a, e.b, e.c)?;
    }
    for (sym, cells) in [("+", &t.add), ("x", &t.mul)] {
        writeln!(io.out)?;
        let header: Vec<String> = (0..t.order).map(|j| format!("{j:>width$}")).collect();
        writeln!(io.out, "{sym:>width$} | {}", header.join(" "))?;
        for i in 0..t.order {
            let row: Vec<String> = (0..t.order).map(|j| format!("{:>width$}", cells[i * t.order + j])).collect();
            writeln!(io.out, "{i:>width$} | {}", row.join(" "))?;
        }
    }
    Ok(())
}
