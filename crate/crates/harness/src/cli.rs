//! Command-line interface and command implementations.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use vc4_core::oracle::{min_vc_exact, MAX_ORACLE_N};
use vc4_core::solver::{
    branching_number, min_vertex_cover, AssertMode, BranchingVector, NullSink, SolveError, Solver, SolverConfig,
    TraceSink,
};
use vc4_core::Graph;

use crate::dimacs::{parse_dimacs, write_dimacs};
use crate::generate::{gen_bounded_degree, Profile};
use crate::jsonl::JsonLinesSink;
use crate::report::{bench, corpus, run_decision};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "vc4", version, about = "Exact vertex cover for graphs of maximum degree 4")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AssertArg {
    Abort,
    Warn,
}

impl From<AssertArg> for AssertMode {
    fn from(a: AssertArg) -> Self {
        match a {
            AssertArg::Abort => AssertMode::Abort,
            AssertArg::Warn => AssertMode::Warn,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the graph has a vertex cover of size at most k.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// Print the cover as `v <id>` lines.
        #[arg(long)]
        cover: bool,
        /// Write a JSON-lines trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long = "assert", value_enum, default_value = "abort")]
        assert_mode: AssertArg,
    },
    /// Print the minimum vertex cover size.
    Minvc {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare the solver with the exhaustive oracle for every k.
    Verify {
        #[arg(long, conflicts_with = "dir", required_unless_present = "dir")]
        input: Option<PathBuf>,
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Skip graphs larger than this.
        #[arg(long, default_value_t = 24)]
        max_n: usize,
    },
    /// Run a seeded corpus and write a JSON report.
    Bench {
        #[arg(long)]
        count: usize,
        /// Inclusive range `A..B`.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        report: PathBuf,
    },
    /// Generate a connected bounded-degree graph in DIMACS format.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum)]
        profile: Profile,
        #[arg(long)]
        out: PathBuf,
    },
    /// Root of Σ x^(-aᵢ) = 1 for a comma-separated vector.
    BranchingNumber {
        #[arg(long)]
        vector: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Violation(_) => EXIT_VIOLATION,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Assertion(_) | SolveError::CoverVerification(_) => CliError::Violation(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

/// Entries are integers, fractions `p/q` or decimals.
pub fn parse_vector(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            let bad = || CliError::Usage(format!("bad vector entry {part:?}"));
            match part.split_once('/') {
                Some((p, q)) => {
                    let p: f64 = p.trim().parse().map_err(|_| bad())?;
                    let q: f64 = q.trim().parse().map_err(|_| bad())?;
                    if q == 0.0 {
                        return Err(bad());
                    }
                    Ok(p / q)
                }
                None => part.parse().map_err(|_| bad()),
            }
        })
        .collect()
}

fn load(path: &Path, err: &mut dyn Write) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let parsed = parse_dimacs(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(parsed.graph)
}

/// Runs one command, writing results to `out` and diagnostics to `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let w = |r: std::io::Result<()>| r.map_err(|e| CliError::Input(format!("output: {e}")));
    match cmd {
        Command::Solve { input, k, cover, trace, assert_mode } => {
            let g = load(&input, err)?;
            let config = SolverConfig { assert_mode: assert_mode.into(), want_cover: cover };
            let (decision, stats) = match &trace {
                Some(path) => {
                    let file = fs::File::create(path).map_err(|e| io_err(path, e))?;
                    let mut sink = JsonLinesSink::new(BufWriter::new(file));
                    let res = solve_with(&g, k, config, &mut sink);
                    sink.finish().map_err(|e| io_err(path, e))?;
                    res?
                }
                None => solve_with(&g, k, config, &mut NullSink)?,
            };
            w(writeln!(out, "{}", if decision.answer { "yes" } else { "no" }))?;
            if let Some(c) = decision.cover.filter(|_| cover) {
                for v in c {
                    w(writeln!(out, "v {}", v.0 + 1))?;
                }
            }
            if !stats.violations.is_empty() {
                for v in &stats.violations {
                    let _ = writeln!(err, "violation: {v}");
                }
                return Ok(EXIT_VIOLATION);
            }
            Ok(if decision.answer { EXIT_OK } else { EXIT_NO })
        }
        Command::Minvc { input } => {
            let g = load(&input, err)?;
            let (size, _) = min_vertex_cover(&g)?;
            w(writeln!(out, "{size}"))?;
            Ok(EXIT_OK)
        }
        Command::Verify { input, dir, max_n } => {
            let max_n = max_n.min(MAX_ORACLE_N);
            let files = match (input, dir) {
                (Some(f), _) => vec![f],
                (None, Some(d)) => {
                    let mut files: Vec<PathBuf> = fs::read_dir(&d)
                        .map_err(|e| io_err(&d, e))?
                        .filter_map(|e| e.ok().map(|e| e.path()))
                        .filter(|p| p.is_file())
                        .collect();
                    files.sort();
                    files
                }
                (None, None) => return Err(CliError::Usage("one of --input or --dir is required".into())),
            };
            let (mut agree, mut total) = (0usize, 0usize);
            for path in files {
                let g = load(&path, err)?;
                if g.n() > max_n {
                    w(writeln!(out, "{}: skipped (n = {} > {max_n})", path.display(), g.n()))?;
                    continue;
                }
                let opt = min_vc_exact(&g).map_err(|e| CliError::Input(e.to_string()))?.size as i64;
                let mut ok = 0;
                for k in 0..=g.n() as i64 {
                    let o = run_decision(&g, k, true)?;
                    if o.answer == (k >= opt) && o.cover_ok != Some(false) && o.stats.violations.is_empty() {
                        ok += 1;
                    }
                }
                let n_k = g.n() + 1;
                w(writeln!(out, "{}: opt {opt}, agree {ok}/{n_k}", path.display()))?;
                agree += ok;
                total += n_k;
            }
            w(writeln!(out, "agreement {agree}/{total}"))?;
            Ok(if agree == total { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Bench { count, n_range: (lo, hi), seed, report } => {
            if lo < 5 {
                return Err(CliError::Usage("n-range must start at 5 or above".into()));
            }
            let entries = corpus(count, lo, hi, seed).map_err(|e| CliError::Input(e.to_string()))?;
            let r = bench(&entries)?;
            let json = serde_json::to_string_pretty(&r).map_err(|e| CliError::Input(e.to_string()))?;
            fs::write(&report, json).map_err(|e| io_err(&report, e))?;
            w(write!(out, "{}", r.summary()))?;
            Ok(if r.is_clean() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Gen { n, seed, profile, out: path } => {
            let g = gen_bounded_degree(n, seed, profile).map_err(|e| CliError::Input(e.to_string()))?;
            fs::write(&path, write_dimacs(&g)).map_err(|e| io_err(&path, e))?;
            Ok(EXIT_OK)
        }
        Command::BranchingNumber { vector } => {
            let v = BranchingVector::new(parse_vector(&vector)?).map_err(|e| CliError::Usage(e.to_string()))?;
            w(writeln!(out, "{:.6}", branching_number(&v)))?;
            Ok(EXIT_OK)
        }
    }
}

fn solve_with(
    g: &Graph,
    k: i64,
    config: SolverConfig,
    sink: &mut dyn TraceSink,
) -> Result<(vc4_core::Decision, vc4_core::solver::SolveStats), CliError> {
    let mut solver = Solver::new(config, sink);
    let d = solver.decide(g, k)?;
    Ok((d, solver.stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_and_ranges() {
        assert_eq!(parse_vector("5/3, 3,7/3").unwrap(), vec![5.0 / 3.0, 3.0, 7.0 / 3.0]);
        assert!(parse_vector("1/0").is_err());
        assert!(parse_vector("a").is_err());
        assert_eq!(parse_range("5..24"), Ok((5, 24)));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("9").is_err());
    }
}
