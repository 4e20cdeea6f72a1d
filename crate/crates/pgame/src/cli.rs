//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 solver precondition
//! failure, 3 malformed input.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use pgame_core::random::FamilySpec;
use pgame_core::special::classify;
use pgame_core::zielonka::Unmonitored;
use pgame_core::{Family, GameClassReport, ParityGame, Solution, VertexSet};

use crate::bench::{run_bench, write_csv, BenchConfig, BenchError};
use crate::pgsolver::{parse_pgsolver, write_pgsolver};
use crate::solve::{solve_with, with_large_stack, Algorithm, SolveFailure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pgame", version, about = "Parity game solver, generator and benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a game of a named family in PGSolver format.
    Generate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Seed for the random families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a game and print both winning regions.
    Solve {
        #[arg(long, default_value = "recursive", value_parser = parse_algorithm)]
        algorithm: Algorithm,
        /// Also print the solver's work counters.
        #[arg(long)]
        stats: bool,
        /// PGSolver file; stdin if omitted.
        file: Option<PathBuf>,
    },
    /// Report which special classes a game belongs to.
    Classify {
        /// PGSolver file; stdin if omitted.
        file: Option<PathBuf>,
    },
    /// Solve a family for a range of sizes and write one CSV row per (n, algorithm).
    Bench {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        min: u64,
        #[arg(long)]
        max: u64,
        /// Comma-separated list of algorithms.
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_algorithm)]
        algorithms: Vec<Algorithm>,
        #[arg(long)]
        csv: PathBuf,
        /// Wall-clock limit per instance.
        #[arg(long)]
        timeout_seconds: Option<f64>,
        /// Seed for the random families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|_| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family `{s}` (expected one of {})", names.join(", "))
    })
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

/// A failure carrying its exit code and message.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Generate { family, n, seed, out } => {
            let game = FamilySpec::new(family, n as usize).with_seed(seed).generate();
            let text = write_pgsolver(&game).map_err(|e| Failure::usage(e.to_string()))?;
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| io_failure(&path, e)),
                None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(e.to_string())),
            }
        }
        Command::Solve { algorithm, stats, file } => {
            let game = load(file.as_deref(), stdin)?;
            let solution = with_large_stack(|| solve_with(algorithm, &game, &mut Unmonitored)).map_err(|e| match e {
                SolveFailure::Precondition(_) | SolveFailure::Oracle(_) => Failure {
                    code: EXIT_PRECONDITION,
                    message: format!("{algorithm} does not apply: {e}"),
                },
                SolveFailure::Solver(e) => Failure {
                    code: EXIT_PRECONDITION,
                    message: e.to_string(),
                },
            })?;
            print_solution(stdout, &solution, stats).map_err(|e| Failure::usage(e.to_string()))
        }
        Command::Classify { file } => {
            let game = load(file.as_deref(), stdin)?;
            let report = with_large_stack(|| classify(&game));
            print_report(stdout, &report).map_err(|e| Failure::usage(e.to_string()))
        }
        Command::Bench {
            family,
            min,
            max,
            algorithms,
            csv,
            timeout_seconds,
            seed,
        } => {
            if max < min {
                return Err(Failure::usage(format!("--max {max} is below --min {min}")));
            }
            let timeout = match timeout_seconds {
                Some(t) if t.is_finite() && t > 0.0 => Some(Duration::from_secs_f64(t)),
                Some(t) => return Err(Failure::usage(format!("--timeout-seconds must be positive, got {t}"))),
                None => None,
            };
            let config = BenchConfig {
                family,
                min: min as usize,
                max: max as usize,
                algorithms,
                timeout,
                seed,
            };
            let rows = with_large_stack(|| run_bench(&config)).map_err(|e| match e {
                BenchError::Precondition { .. } => Failure {
                    code: EXIT_PRECONDITION,
                    message: e.to_string(),
                },
                other => Failure::usage(other.to_string()),
            })?;
            let file = fs::File::create(&csv).map_err(|e| io_failure(&csv, e))?;
            write_csv(&rows, std::io::BufWriter::new(file)).map_err(|e| Failure::usage(e.to_string()))?;
            let timed_out = rows.iter().filter(|r| r.timed_out()).count();
            writeln!(stdout, "wrote {} rows to {} ({} timed out)", rows.len(), csv.display(), timed_out)
                .map_err(|e| Failure::usage(e.to_string()))
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::usage(format!("{}: {e}", path.display()))
}

fn load(file: Option<&Path>, stdin: &mut dyn Read) -> Result<ParityGame, Failure> {
    let text = match file {
        Some(path) => fs::read_to_string(path).map_err(|e| io_failure(path, e))?,
        None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
            text
        }
    };
    parse_pgsolver(&text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: e.to_string(),
    })
}

fn id_list(set: &VertexSet) -> String {
    set.iter().map(|v| v.index().to_string()).collect::<Vec<_>>().join(" ")
}

fn print_solution(out: &mut dyn Write, solution: &Solution, stats: bool) -> std::io::Result<()> {
    writeln!(out, "even: {}", id_list(&solution.even))?;
    writeln!(out, "odd: {}", id_list(&solution.odd))?;
    if stats {
        let s = &solution.stats;
        writeln!(out, "recursive_calls: {}", s.recursive_calls)?;
        writeln!(out, "for_iterations: {}", s.for_iterations)?;
        writeln!(out, "attractor_edge_visits: {}", s.attractor_edge_visits)?;
        writeln!(out, "second_calls_total: {}", s.second_calls_total)?;
        writeln!(out, "second_calls_empty: {}", s.second_calls_empty)?;
        writeln!(out, "max_recursion_depth: {}", s.max_recursion_depth)?;
    }
    Ok(())
}

fn print_report(out: &mut dyn Write, r: &GameClassReport) -> std::io::Result<()> {
    writeln!(out, "weak: {}", r.is_weak)?;
    writeln!(out, "dull: {}", r.is_dull)?;
    writeln!(out, "solitaire: {}", r.is_solitaire)?;
    if let Some(p) = r.solitaire_owner {
        writeln!(out, "solitaire_owner: {p}")?;
    }
    writeln!(out, "nested_solitaire: {}", r.is_nested_solitaire)?;
    if let Some((v, w)) = r.ascending_edge {
        writeln!(out, "ascending_edge: {v} -> {w}")?;
    }
    if let Some(m) = &r.mixed_cycles {
        writeln!(out, "mixed_cycles: {m}")?;
    }
    if let Some((a, b)) = r.choice_conflict {
        writeln!(out, "choice_conflict: {a} {b}")?;
    }
    if let Some((a, b)) = r.scc_choice_conflict {
        writeln!(out, "scc_choice_conflict: {a} {b}")?;
    }
    Ok(())
}
