//! Zielonka's recursive algorithm and its variant that decomposes every
//! subgame into strongly connected components before recursing.
//!
//! Both solvers work on zero-copy [`Subgame`] views and count their work in
//! [`SolveStats`]. A [`Monitor`] can observe every recursive call and
//! interrupt a solve.

use alloc::vec::Vec;

use thiserror::Error;

use crate::attractor::Attractor;
use crate::game::{GameError, ParityGame, Player, Subgame, VertexId};
use crate::scc::scc_decompose;
use crate::set::VertexSet;
use crate::solution::{SolveStats, Solution};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("vertex {0} has no successor inside the game")]
    NotTotal(VertexId),
    #[error("solve interrupted")]
    Interrupted,
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Where a recursive invocation comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CallSite {
    Root,
    /// Recursion on `G \ A`, `A` the attractor of the top priority.
    First,
    /// Recursion on `G \ B`, `B` the opponent's attractor.
    Second,
}

/// Hook into a running solve.
pub trait Monitor {
    /// Called on entry of every recursive invocation, before any work.
    ///
    /// For [`solve_recursive`] on a game whose ids are not ordered by
    /// priority, `game` is a view of an internally relabelled copy.
    fn on_call(&mut self, _site: CallSite, _game: &Subgame<'_>) {}

    /// Polled once per recursive invocation; returning `true` aborts the
    /// solve with [`SolveError::Interrupted`].
    fn should_stop(&mut self) -> bool {
        false
    }
}

/// A monitor that observes nothing.
pub struct Unmonitored;

impl Monitor for Unmonitored {}

impl<F: FnMut() -> bool> Monitor for F {
    fn should_stop(&mut self) -> bool {
        self()
    }
}

/// Solves a total (sub)game with Zielonka's recursive algorithm.
pub fn solve_recursive(game: &Subgame<'_>) -> Result<Solution, SolveError> {
    solve_recursive_monitored(game, &mut Unmonitored)
}

pub fn solve_recursive_monitored(
    game: &Subgame<'_>,
    monitor: &mut dyn Monitor,
) -> Result<Solution, SolveError> {
    if let Some(v) = game.first_dead_end() {
        return Err(SolveError::NotTotal(v));
    }
    let parent = game.game();
    if parent.is_priority_descending() {
        let mut run = Run::new(parent, monitor);
        let (even, odd) = run.zielonka(game, CallSite::Root, 1)?;
        return Ok(Solution {
            even,
            odd,
            stats: run.stats,
        });
    }

    // The top-priority lookup is a first-set-bit scan only when ids follow
    // priority order, so solve on a relabelled copy and map back.
    let (sorted, original) = parent.sorted_by_priority();
    let mut live = sorted.empty_set();
    for (new, old) in original.iter().enumerate() {
        if game.contains(*old) {
            live.insert(VertexId::new(new));
        }
    }
    let view = Subgame::from_set(&sorted, live);
    let mut run = Run::new(&sorted, monitor);
    let (even, odd) = run.zielonka(&view, CallSite::Root, 1)?;
    let back = |set: VertexSet| VertexSet::from_iter_in(parent.vertex_count(), set.iter().map(|v| original[v.index()]));
    Ok(Solution {
        even: back(even),
        odd: back(odd),
        stats: run.stats,
    })
}

/// Solves a total (sub)game with the SCC-integrated recursive algorithm.
///
/// Each invocation repeatedly takes a final SCC `C` of the residual game,
/// solves `G ∩ C` with the recursive step (recursing through this same
/// function), attracts both winning sets within the residual game, removes
/// them and decomposes again.
pub fn solve_recursive_scc(game: &Subgame<'_>) -> Result<Solution, SolveError> {
    solve_recursive_scc_monitored(game, &mut Unmonitored)
}

pub fn solve_recursive_scc_monitored(
    game: &Subgame<'_>,
    monitor: &mut dyn Monitor,
) -> Result<Solution, SolveError> {
    if let Some(v) = game.first_dead_end() {
        return Err(SolveError::NotTotal(v));
    }
    let mut run = Run::new(game.game(), monitor);
    let (even, odd) = run.zielonka_scc(game, CallSite::Root, 1)?;
    Ok(Solution {
        even,
        odd,
        stats: run.stats,
    })
}

/// Convenience wrappers over the whole game.
pub fn solve_game_recursive(game: &ParityGame) -> Result<Solution, SolveError> {
    solve_recursive(&game.full())
}

pub fn solve_game_recursive_scc(game: &ParityGame) -> Result<Solution, SolveError> {
    solve_recursive_scc(&game.full())
}

struct Run<'m> {
    stats: SolveStats,
    attractor: Attractor,
    monitor: &'m mut dyn Monitor,
}

type Regions = (VertexSet, VertexSet);

fn split(regions: Regions, p: Player) -> Regions {
    match p {
        Player::Even => regions,
        Player::Odd => (regions.1, regions.0),
    }
}

fn join(own: VertexSet, other: VertexSet, p: Player) -> Regions {
    match p {
        Player::Even => (own, other),
        Player::Odd => (other, own),
    }
}

impl<'m> Run<'m> {
    fn new(game: &ParityGame, monitor: &'m mut dyn Monitor) -> Self {
        Run {
            stats: SolveStats::default(),
            attractor: Attractor::new(game.vertex_count()),
            monitor,
        }
    }

    fn enter(&mut self, site: CallSite, game: &Subgame<'_>, depth: u64) -> Result<(), SolveError> {
        if self.monitor.should_stop() {
            return Err(SolveError::Interrupted);
        }
        self.monitor.on_call(site, game);
        self.stats.recursive_calls += 1;
        self.stats.max_recursion_depth = self.stats.max_recursion_depth.max(depth);
        if site == CallSite::Second {
            self.stats.second_calls_total += 1;
            if game.is_empty() {
                self.stats.second_calls_empty += 1;
            }
        }
        Ok(())
    }

    fn zielonka(&mut self, game: &Subgame<'_>, site: CallSite, depth: u64) -> Result<Regions, SolveError> {
        self.enter(site, game, depth)?;
        let parent = game.game();
        if game.is_empty() {
            return Ok((parent.empty_set(), parent.empty_set()));
        }
        let m = game.max_priority()?;
        let p = Player::of_priority(m);
        let top = game.vertices_with_priority(m);
        let a = self.attractor.compute(game, p, &top, &mut self.stats);

        let (w_p, w_opp) = split(self.zielonka(&game.remove(&a), CallSite::First, depth + 1)?, p);
        if w_opp.is_empty() {
            return Ok(join(w_p.union(&a), w_opp, p));
        }
        let b = self.attractor.compute(game, !p, &w_opp, &mut self.stats);
        let (w_p, mut w_opp) = split(self.zielonka(&game.remove(&b), CallSite::Second, depth + 1)?, p);
        w_opp.union_with(&b);
        Ok(join(w_p, w_opp, p))
    }

    fn zielonka_scc(&mut self, game: &Subgame<'_>, site: CallSite, depth: u64) -> Result<Regions, SolveError> {
        self.enter(site, game, depth)?;
        let parent = game.game();
        let mut even = parent.empty_set();
        let mut odd = parent.empty_set();
        let mut residual = game.clone();
        while !residual.is_empty() {
            let decomposition = scc_decompose(&residual);
            // Component 0 is the final SCC with the smallest index.
            let component = decomposition.component_set(0);
            debug_assert!(decomposition.is_final(0));
            self.stats.for_iterations += 1;

            let h = residual.restrict(&component)?;
            let m = h.max_priority()?;
            let p = Player::of_priority(m);
            let top = h.vertices_with_priority(m);
            let a = self.attractor.compute(&h, p, &top, &mut self.stats);
            let (w_p, w_opp) = split(self.zielonka_scc(&h.remove(&a), CallSite::First, depth + 1)?, p);
            let (won_even, won_odd) = if w_opp.is_empty() {
                join(w_p.union(&a), w_opp, p)
            } else {
                let b = self.attractor.compute(&h, !p, &w_opp, &mut self.stats);
                let (w_p, mut w_opp) = split(self.zielonka_scc(&h.remove(&b), CallSite::Second, depth + 1)?, p);
                w_opp.union_with(&b);
                join(w_p, w_opp, p)
            };

            let attracted_even = self.attractor.compute(&residual, Player::Even, &won_even, &mut self.stats);
            let attracted_odd = self.attractor.compute(&residual, Player::Odd, &won_odd, &mut self.stats);
            debug_assert!(attracted_even.is_disjoint(&attracted_odd));
            let claimed = attracted_even.union(&attracted_odd);
            even.union_with(&attracted_even);
            odd.union_with(&attracted_odd);
            residual = residual.remove(&claimed);
        }
        Ok((even, odd))
    }
}

/// Collects every recursive argument; handy for invariant checks.
#[derive(Default)]
pub struct CallRecorder {
    pub calls: Vec<(CallSite, VertexSet)>,
}

impl Monitor for CallRecorder {
    fn on_call(&mut self, site: CallSite, game: &Subgame<'_>) {
        self.calls.push((site, game.live().clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_solitaire, gen_weak, gen_whitegame};
    use crate::game::VertexRecord;
    use alloc::vec;

    #[test]
    fn empty_game_gives_empty_regions() {
        let g = gen_weak(1);
        let s = solve_recursive(&Subgame::empty(&g)).unwrap();
        assert!(s.even.is_empty() && s.odd.is_empty());
        assert_eq!(s.stats.recursive_calls, 1);
        let s = solve_recursive_scc(&Subgame::empty(&g)).unwrap();
        assert!(s.even.is_empty() && s.odd.is_empty());
        assert_eq!(s.stats.for_iterations, 0);
    }

    #[test]
    fn solitaire_three_is_won_by_even() {
        let g = gen_solitaire(3, false);
        for s in [solve_game_recursive(&g).unwrap(), solve_game_recursive_scc(&g).unwrap()] {
            assert_eq!(s.even.len(), 9);
            assert!(s.odd.is_empty());
        }
        assert!(solve_game_recursive(&g).unwrap().stats.recursive_calls >= 8);
    }

    #[test]
    fn weak_four_splits_by_row() {
        let g = gen_weak(4);
        let even = g.set_of([8, 0, 1, 2, 3]);
        let odd = g.set_of([9, 4, 5, 6, 7]);
        for s in [solve_game_recursive(&g).unwrap(), solve_game_recursive_scc(&g).unwrap()] {
            assert_eq!(s.even, even);
            assert_eq!(s.odd, odd);
        }
    }

    #[test]
    fn whitegame_winner_alternates_with_parity_of_n() {
        let h3 = gen_whitegame(3);
        let h4 = gen_whitegame(4);
        assert_eq!(solve_game_recursive(&h3).unwrap().odd.len(), 9);
        assert_eq!(solve_game_recursive(&h4).unwrap().even.len(), 12);
        assert_eq!(solve_game_recursive_scc(&h3).unwrap().odd.len(), 9);
        assert_eq!(solve_game_recursive_scc(&h4).unwrap().even.len(), 12);
    }

    #[test]
    fn non_total_input_rejected() {
        let g = gen_solitaire(3, false);
        let broken = g.full().remove(&g.set_of([0]));
        assert_eq!(solve_recursive(&broken).unwrap_err(), SolveError::NotTotal(VertexId::new(1)));
        assert_eq!(solve_recursive_scc(&broken).unwrap_err(), SolveError::NotTotal(VertexId::new(1)));
    }

    #[test]
    fn subgame_solutions_stay_inside_the_view() {
        // S3 without v5: only u3 (id 8) is won by odd
        let g = gen_solitaire(3, false);
        let minus = g.full().remove(&g.set_of([5]));
        let s = solve_recursive(&minus).unwrap();
        assert_eq!(s.odd, g.set_of([8]));
        assert!(s.is_partition_of(minus.live()));
        let s2 = solve_recursive_scc(&minus).unwrap();
        assert!(s.same_regions(&s2));
    }

    #[test]
    fn interrupt_stops_the_solve() {
        let g = gen_whitegame(8);
        let mut budget = 10u32;
        let mut stop = || {
            budget = budget.saturating_sub(1);
            budget == 0
        };
        assert_eq!(solve_recursive_monitored(&g.full(), &mut stop).unwrap_err(), SolveError::Interrupted);
    }

    #[test]
    fn recorder_sees_root_first_and_second_calls() {
        let g = gen_solitaire(2, false);
        let mut rec = CallRecorder::default();
        let s = solve_recursive_monitored(&g.full(), &mut rec).unwrap();
        assert_eq!(rec.calls.len() as u64, s.stats.recursive_calls);
        assert_eq!(rec.calls[0].0, CallSite::Root);
        let seconds = rec.calls.iter().filter(|(site, _)| *site == CallSite::Second).count() as u64;
        assert_eq!(seconds, s.stats.second_calls_total);
    }

    #[test]
    fn unsorted_priorities_match_sorted_ids() {
        // odd self-loop at id 0 with low priority, even sink at id 1
        let g = ParityGame::new(vec![
            VertexRecord::new(Player::Odd, 1, [0, 1]),
            VertexRecord::new(Player::Even, 4, [1]),
        ])
        .unwrap();
        let s = solve_game_recursive(&g).unwrap();
        assert_eq!(s.even, g.set_of([1]));
        assert_eq!(s.odd, g.set_of([0]));
    }
}
