//! Algorithm selection shared by the `solve` and `bench` commands.

use std::fmt;
use std::str::FromStr;

use pgame_core::oracle::{solve_oracle, OracleError};
use pgame_core::special::{solve_nested_solitaire, solve_weak, ClassError};
use pgame_core::zielonka::{solve_recursive_monitored, solve_recursive_scc_monitored, Monitor, SolveError};
use pgame_core::{ParityGame, Solution};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Recursive,
    RecursiveScc,
    Weak,
    NestedSolitaire,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Recursive,
        Algorithm::RecursiveScc,
        Algorithm::Weak,
        Algorithm::NestedSolitaire,
        Algorithm::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Recursive => "recursive",
            Algorithm::RecursiveScc => "recursive-scc",
            Algorithm::Weak => "weak",
            Algorithm::NestedSolitaire => "nested-solitaire",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().replace('_', "-");
        Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| {
            let names: Vec<_> = Algorithm::ALL.iter().map(|a| a.name()).collect();
            format!("unknown algorithm `{s}` (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Debug, Error)]
pub enum SolveFailure {
    /// The input is outside the class the algorithm handles.
    #[error(transparent)]
    Precondition(#[from] ClassError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Solver(#[from] SolveError),
}

/// Runs `algorithm` on the whole game. The monitor is only consulted by the
/// two recursive solvers.
pub fn solve_with(algorithm: Algorithm, game: &ParityGame, monitor: &mut impl Monitor) -> Result<Solution, SolveFailure> {
    Ok(match algorithm {
        Algorithm::Recursive => solve_recursive_monitored(&game.full(), monitor)?,
        Algorithm::RecursiveScc => solve_recursive_scc_monitored(&game.full(), monitor)?,
        Algorithm::Weak => solve_weak(game)?,
        Algorithm::NestedSolitaire => solve_nested_solitaire(game)?,
        Algorithm::Oracle => solve_oracle(game)?,
    })
}

/// Runs `f` on a thread with a stack large enough for deep recursion on big
/// games.
pub fn with_large_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    const STACK: usize = 1 << 30;
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .stack_size(STACK)
            .spawn_scoped(scope, f)
            .expect("failed to spawn solver thread")
            .join()
            .unwrap_or_else(|panic| std::panic::resume_unwind(panic))
    })
}
