//! Parity games under the max-parity condition: the game model, attractors,
//! SCC decomposition, Zielonka's recursive algorithm with and without
//! per-call SCC decomposition, dedicated solvers for weak, dull and nested
//! solitaire games, a brute-force reference solver, and generators for game
//! families on which the recursive algorithms are slow.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use pgame_core::{families::gen_solitaire, zielonka::solve_game_recursive};
//!
//! let game = gen_solitaire(3, false);
//! let solution = solve_game_recursive(&game).unwrap();
//! assert_eq!(solution.even.len(), 9);
//! assert!(solution.stats.recursive_calls >= 1 << 3);
//! ```
#![no_std]

extern crate alloc;

pub mod attractor;
pub mod families;
pub mod game;
pub mod oracle;
pub mod random;
pub mod scc;
pub mod set;
pub mod solution;
pub mod special;
pub mod zielonka;

pub use attractor::{attractor, Attractor};
pub use game::{GameError, ParityGame, Player, Priority, Subgame, VertexId, VertexRecord};
pub use random::{Family, FamilySpec};
pub use scc::{scc_decompose, SccDecomposition};
pub use set::VertexSet;
pub use solution::{SolveStats, Solution};
pub use special::{classify, GameClassReport};
pub use zielonka::{solve_recursive, solve_recursive_scc, SolveError};
