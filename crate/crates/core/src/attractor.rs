//! Attractor computation.
//!
//! `Attr_p(U)` is the least set containing `U`, every `p`-vertex with a
//! successor inside, and every opponent vertex whose successors all lie
//! inside. It is computed by backward propagation from `U`, keeping a
//! remaining-out-degree counter for opponent vertices, in `O(|V| + |E|)`.
//!
//! When `U` covers most of the game the search is seeded from the other
//! side: the out-edges of the vertices outside `U` are scanned once and only
//! newly attracted vertices propagate further. Edges between vertices of `U`
//! are then never touched, which keeps repeated attractors into nearly the
//! whole game (as on paradises of weak games) proportional to what is left
//! outside.
//!
//! The view passed in must be total; an opponent vertex without live
//! successors is never reached by the backward search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::game::{Player, Subgame, VertexId};
use crate::set::VertexSet;
use crate::solution::SolveStats;

/// Reusable buffers for repeated attractor computations over one game.
///
/// Counters are versioned by an epoch so that a computation never pays for
/// clearing state it did not touch.
#[derive(Debug, Clone)]
pub struct Attractor {
    remaining: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: VecDeque<VertexId>,
}

impl Attractor {
    pub fn new(universe: usize) -> Self {
        Attractor {
            remaining: vec![0; universe],
            stamp: vec![0; universe],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    /// `Attr_player(target)` within `game`. `target` must be a subset of the
    /// live vertices.
    pub fn compute(
        &mut self,
        game: &Subgame<'_>,
        player: Player,
        target: &VertexSet,
        stats: &mut SolveStats,
    ) -> VertexSet {
        let parent = game.game();
        debug_assert!(target.is_subset(game.live()));
        if self.remaining.len() < parent.vertex_count() {
            *self = Attractor::new(parent.vertex_count());
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }

        let mut attracted = target.clone();
        self.queue.clear();
        if 2 * target.len() > game.len() {
            // Large target: look forward from the few vertices outside it
            // instead of backward over every edge entering it.
            for y in game.live().difference(target).iter() {
                let mut inside = 0u32;
                let mut total = 0u32;
                for w in game.successors(y) {
                    stats.attractor_edge_visits += 1;
                    total += 1;
                    if target.contains(w) {
                        inside += 1;
                    }
                }
                let pulled = if parent.owner(y) == player {
                    inside > 0
                } else {
                    self.stamp[y.index()] = self.epoch;
                    self.remaining[y.index()] = total - inside;
                    inside == total
                };
                if pulled {
                    attracted.insert(y);
                    self.queue.push_back(y);
                }
            }
        } else {
            self.queue.extend(target.iter());
        }
        while let Some(x) = self.queue.pop_front() {
            for &y in parent.predecessors(x) {
                if !game.contains(y) {
                    continue;
                }
                stats.attractor_edge_visits += 1;
                if attracted.contains(y) {
                    continue;
                }
                let pulled = if parent.owner(y) == player {
                    true
                } else {
                    let i = y.index();
                    if self.stamp[i] != self.epoch {
                        self.stamp[i] = self.epoch;
                        self.remaining[i] = game.successors(y).count() as u32;
                    }
                    self.remaining[i] -= 1;
                    self.remaining[i] == 0
                };
                if pulled {
                    attracted.insert(y);
                    self.queue.push_back(y);
                }
            }
        }
        attracted
    }
}

/// One-shot `Attr_player(target)` in `game`.
pub fn attractor(game: &Subgame<'_>, player: Player, target: &VertexSet) -> VertexSet {
    Attractor::new(game.game().vertex_count()).compute(game, player, target, &mut SolveStats::default())
}

/// Same as [`attractor`], adding the examined edges to `stats`.
pub fn attractor_counted(
    game: &Subgame<'_>,
    player: Player,
    target: &VertexSet,
    stats: &mut SolveStats,
) -> VertexSet {
    Attractor::new(game.game().vertex_count()).compute(game, player, target, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_solitaire, gen_weak};

    #[test]
    fn solitaire_top_vertex_attracts_nothing() {
        let g = gen_solitaire(3, false);
        let v5 = g.set_of([5]);
        assert_eq!(attractor(&g.full(), Player::Odd, &v5), v5);
    }

    #[test]
    fn attracting_everything_is_everything() {
        let g = gen_weak(3);
        let all = g.full().live().clone();
        for p in [Player::Even, Player::Odd] {
            assert_eq!(attractor(&g.full(), p, &all), all);
        }
    }

    #[test]
    fn weak_game_top_priority_is_closed_under_attraction() {
        let g = gen_weak(4);
        let top = g.set_of([3, 7]);
        assert_eq!(attractor(&g.full(), Player::Even, &top), top);
    }

    #[test]
    fn edge_visits_count_live_in_edges_of_attracted_vertices() {
        let g = gen_solitaire(1, false);
        // v0 (id 0) attracts v1 and then u1: in-edges v0<-{v0,v1}, v1<-{u1}, u1<-{u1}
        let mut stats = SolveStats::default();
        let a = attractor_counted(&g.full(), Player::Even, &g.set_of([0]), &mut stats);
        assert_eq!(a.len(), 3);
        assert_eq!(stats.attractor_edge_visits, 4);
    }

    #[test]
    fn scratch_reuse_across_views() {
        let g = gen_weak(2);
        let mut engine = Attractor::new(g.vertex_count());
        let mut stats = SolveStats::default();
        let full = g.full();
        let first = engine.compute(&full, Player::Odd, &g.set_of([5]), &mut stats);
        let again = engine.compute(&full, Player::Odd, &g.set_of([5]), &mut stats);
        assert_eq!(first, again);
    }
}
