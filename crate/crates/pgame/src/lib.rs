//! PGSolver file format, command-line interface and benchmark harness for
//! [`pgame_core`].

pub mod bench;
pub mod cli;
pub mod pgsolver;
pub mod solve;

pub use bench::{run_bench, write_csv, BenchConfig, BenchError, BenchRow};
pub use pgsolver::{parse_pgsolver, write_pgsolver, FormatError, ParseReason};
pub use solve::{solve_with, Algorithm, SolveFailure};
