//! Brute-force reference solver over positional strategies.
//!
//! Parity games are positionally determined, so a vertex is won by Even iff
//! some positional Even strategy wins from it against every positional Odd
//! strategy. Each strategy pair fixes one successor per vertex; the play
//! from a vertex then runs into a cycle whose highest priority decides it.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::game::{ParityGame, Player, VertexId};
use crate::set::VertexSet;
use crate::solution::{SolveStats, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_strategy_pairs: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 10,
            max_strategy_pairs: 1 << 24,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("game too large for enumeration: {vertices} vertices, {pairs:?} strategy pairs")]
    TooLarge { vertices: usize, pairs: Option<u64> },
}

pub fn solve_oracle(game: &ParityGame) -> Result<Solution, OracleError> {
    solve_oracle_with(game, OracleLimits::default())
}

pub fn solve_oracle_with(game: &ParityGame, limits: OracleLimits) -> Result<Solution, OracleError> {
    let n = game.vertex_count();
    let strategy_count = |p: Player| -> Option<u64> {
        game.vertices()
            .filter(|&v| game.owner(v) == p)
            .try_fold(1u64, |acc, v| acc.checked_mul(game.successors(v).len() as u64))
    };
    let pairs = strategy_count(Player::Even).and_then(|e| strategy_count(Player::Odd).and_then(|o| e.checked_mul(o)));
    if n > limits.max_vertices || pairs.is_none_or(|p| p > limits.max_strategy_pairs) {
        return Err(OracleError::TooLarge { vertices: n, pairs });
    }

    let even_vertices: Vec<VertexId> = game.vertices().filter(|&v| game.owner(v) == Player::Even).collect();
    let odd_vertices: Vec<VertexId> = game.vertices().filter(|&v| game.owner(v) == Player::Odd).collect();
    let mut choice = vec![0usize; n];
    let mut even_region = game.empty_set();

    loop {
        // Vertices where the current Even strategy beats every Odd strategy.
        let mut guaranteed = VertexSet::full(n);
        reset(&mut choice, &odd_vertices);
        loop {
            guaranteed.intersect_with(&even_wins(game, &choice));
            if guaranteed.is_empty() || !advance(&mut choice, &odd_vertices, game) {
                break;
            }
        }
        even_region.union_with(&guaranteed);
        if !advance(&mut choice, &even_vertices, game) {
            break;
        }
    }

    let odd_region = VertexSet::full(n).difference(&even_region);
    Ok(Solution {
        even: even_region,
        odd: odd_region,
        stats: SolveStats::default(),
    })
}

fn reset(choice: &mut [usize], vertices: &[VertexId]) {
    for v in vertices {
        choice[v.index()] = 0;
    }
}

/// Odometer step in lexicographic order by vertex id; `false` on wrap-around.
fn advance(choice: &mut [usize], vertices: &[VertexId], game: &ParityGame) -> bool {
    for &v in vertices.iter().rev() {
        let c = &mut choice[v.index()];
        *c += 1;
        if *c < game.successors(v).len() {
            return true;
        }
        *c = 0;
    }
    false
}

/// Winner of the play from every vertex when each vertex `v` moves to its
/// `choice[v]`-th successor.
fn even_wins(game: &ParityGame, choice: &[usize]) -> VertexSet {
    const UNKNOWN: u8 = 0;
    const ON_PATH: u8 = 1;
    const EVEN: u8 = 2;
    const ODD: u8 = 3;
    let n = game.vertex_count();
    let next = |v: VertexId| game.successors(v)[choice[v.index()]];
    let mut state = vec![UNKNOWN; n];
    let mut path = Vec::new();
    for start in game.vertices() {
        if state[start.index()] != UNKNOWN {
            continue;
        }
        path.clear();
        let mut v = start;
        while state[v.index()] == UNKNOWN {
            state[v.index()] = ON_PATH;
            path.push(v);
            v = next(v);
        }
        let verdict = if state[v.index()] == ON_PATH {
            // Walk the cycle once to find its dominating priority.
            let mut top = game.priority(v);
            let mut w = next(v);
            while w != v {
                top = top.max(game.priority(w));
                w = next(w);
            }
            if top.is_multiple_of(2) {
                EVEN
            } else {
                ODD
            }
        } else {
            state[v.index()]
        };
        for u in &path {
            state[u.index()] = verdict;
        }
    }
    VertexSet::from_iter_in(n, game.vertices().filter(|v| state[v.index()] == EVEN))
}
