//! Special game classes and their dedicated solvers.
//!
//! * weak: priorities never increase along an edge;
//! * dull: even-dominated and odd-dominated cycles never share a vertex;
//! * solitaire: every vertex with two or more successors has the same owner;
//! * nested solitaire: every SCC induces a solitaire game.
//!
//! Dullness is checked per SCC: a component whose top priority has parity
//! `b` must not contain a cycle dominated by the other parity. A component
//! holding cycles of both parities always has two overlapping ones, and the
//! converse is immediate, so the two tests agree. The integration tests
//! compare this against exhaustive basic-cycle enumeration.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::attractor::Attractor;
use crate::game::{ParityGame, Player, Subgame, VertexId};
use crate::scc::scc_decompose;
use crate::solution::{SolveStats, Solution};

/// Two basic cycles of opposite dominant parity inside one SCC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCycles {
    pub even_cycle: Vec<VertexId>,
    pub odd_cycle: Vec<VertexId>,
}

impl MixedCycles {
    /// A vertex lying on both cycles, when the two witnesses happen to meet.
    pub fn shared_vertex(&self) -> Option<VertexId> {
        self.even_cycle.iter().copied().find(|v| self.odd_cycle.contains(v))
    }
}

impl fmt::Display for MixedCycles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "even cycle {:?} and odd cycle {:?} in one SCC", self.even_cycle, self.odd_cycle)
    }
}

/// Class membership of a game, with a counterexample for each failed class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameClassReport {
    pub is_weak: bool,
    pub is_dull: bool,
    pub is_solitaire: bool,
    /// The single player making choices, or `None` if nobody does.
    pub solitaire_owner: Option<Player>,
    pub is_nested_solitaire: bool,
    /// An edge `v -> w` with `P(v) < P(w)`.
    pub ascending_edge: Option<(VertexId, VertexId)>,
    pub mixed_cycles: Option<MixedCycles>,
    /// Two choice vertices with different owners.
    pub choice_conflict: Option<(VertexId, VertexId)>,
    /// Two vertices with different owners making choices inside one SCC.
    pub scc_choice_conflict: Option<(VertexId, VertexId)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("not a weak game: edge {0} -> {1} increases the priority")]
    NotWeak(VertexId, VertexId),
    #[error("not a dull game: {0}")]
    NotDull(MixedCycles),
    #[error("not a nested solitaire game: vertices {0} and {1} belong to different players and both choose inside one SCC")]
    NotNestedSolitaire(VertexId, VertexId),
}

pub fn classify(game: &ParityGame) -> GameClassReport {
    let ascending_edge = find_ascending_edge(game);
    let choice_conflict = find_choice_conflict(game);
    let solitaire_owner = match choice_conflict {
        Some(_) => None,
        None => game
            .vertices()
            .find(|&v| game.successors(v).len() >= 2)
            .map(|v| game.owner(v)),
    };
    let scc_choice_conflict = find_scc_choice_conflict(game);
    let mixed_cycles = find_mixed_cycles(game);
    GameClassReport {
        is_weak: ascending_edge.is_none(),
        is_dull: mixed_cycles.is_none(),
        is_solitaire: choice_conflict.is_none(),
        solitaire_owner,
        is_nested_solitaire: scc_choice_conflict.is_none(),
        ascending_edge,
        mixed_cycles,
        choice_conflict,
        scc_choice_conflict,
    }
}

fn find_ascending_edge(game: &ParityGame) -> Option<(VertexId, VertexId)> {
    game.edges().find(|&(v, w)| game.priority(v) < game.priority(w))
}

fn find_choice_conflict(game: &ParityGame) -> Option<(VertexId, VertexId)> {
    let mut first: [Option<VertexId>; 2] = [None, None];
    for v in game.vertices().filter(|&v| game.successors(v).len() >= 2) {
        first[game.owner(v).index()].get_or_insert(v);
        if let [Some(a), Some(b)] = first {
            return Some((a.min(b), a.max(b)));
        }
    }
    None
}

fn find_scc_choice_conflict(game: &ParityGame) -> Option<(VertexId, VertexId)> {
    let full = game.full();
    let d = scc_decompose(&full);
    for i in 0..d.len() {
        let mut first: [Option<VertexId>; 2] = [None, None];
        for &v in d.component(i) {
            let inside = game
                .successors(v)
                .iter()
                .filter(|&&w| d.component_of(w) == Some(i))
                .count();
            if inside >= 2 {
                first[game.owner(v).index()].get_or_insert(v);
            }
        }
        if let [Some(a), Some(b)] = first {
            return Some((a.min(b), a.max(b)));
        }
    }
    None
}

fn find_mixed_cycles(game: &ParityGame) -> Option<MixedCycles> {
    let full = game.full();
    let d = scc_decompose(&full);
    for i in (0..d.len()).filter(|&i| d.is_nontrivial(i)) {
        let h = full.restrict(&d.component_set(i)).expect("components are nonempty");
        let top = h.max_priority().expect("components are nonempty");
        let own = Player::of_priority(top);
        if let Some(other) = has_cycle_of_dominant_parity(&h, !own) {
            let mine = has_cycle_of_dominant_parity(&h, own).expect("the top vertex of a nontrivial SCC lies on a cycle");
            let (even_cycle, odd_cycle) = match own {
                Player::Even => (mine, other),
                Player::Odd => (other, mine),
            };
            return Some(MixedCycles { even_cycle, odd_cycle });
        }
    }
    None
}

/// Searches for a cycle whose highest priority has `parity`'s parity.
///
/// For every priority `q` of that parity, ascending, tests whether a vertex
/// of priority `q` lies on a cycle of the subgraph of vertices with
/// priority at most `q`. Runs in `O(d · (|V| + |E|))`. Returns the cycle,
/// starting at its dominating vertex.
pub fn has_cycle_of_dominant_parity(game: &Subgame<'_>, parity: Player) -> Option<Vec<VertexId>> {
    let parent = game.game();
    let mut levels: Vec<_> = game
        .vertices()
        .map(|v| parent.priority(v))
        .filter(|&p| Player::of_priority(p) == parity)
        .collect();
    levels.sort_unstable();
    levels.dedup();
    for q in levels {
        let mut below = game.live().clone();
        for v in game.vertices() {
            if parent.priority(v) > q {
                below.remove(v);
            }
        }
        let sub = Subgame::from_set(parent, below);
        let d = scc_decompose(&sub);
        for v in sub.vertices().filter(|&v| parent.priority(v) == q) {
            let c = d.component_of(v).expect("live vertex");
            if d.is_nontrivial(c) {
                let component = sub.restrict(&d.component_set(c)).expect("nonempty");
                return Some(cycle_through(&component, v));
            }
        }
    }
    None
}

/// A shortest cycle through `start`, which must lie on one within `game`.
fn cycle_through(game: &Subgame<'_>, start: VertexId) -> Vec<VertexId> {
    let n = game.game().vertex_count();
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut seen = game.game().empty_set();
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut last = None;
    'search: while let Some(x) = queue.pop_front() {
        for w in game.successors(x) {
            if w == start {
                last = Some(x);
                break 'search;
            }
            if seen.insert(w) {
                parent[w.index()] = Some(x);
                queue.push_back(w);
            }
        }
    }
    let mut cycle = Vec::new();
    let mut cursor = last.expect("start lies on a cycle");
    while cursor != start {
        cycle.push(cursor);
        cursor = parent[cursor.index()].expect("bfs tree reaches start");
    }
    cycle.push(start);
    cycle.reverse();
    cycle
}

/// Dedicated solver for weak games.
///
/// Repeatedly takes the vertices `L` of lowest remaining priority `m`
/// (closed in a weak game), gives `Attr(L)` to the player of parity `m`,
/// and removes it. Vertices are visited in priority order once.
pub fn solve_weak(game: &ParityGame) -> Result<Solution, ClassError> {
    if let Some((v, w)) = find_ascending_edge(game) {
        return Err(ClassError::NotWeak(v, w));
    }
    let mut order: Vec<VertexId> = game.vertices().collect();
    order.sort_by_key(|&v| game.priority(v));

    let mut stats = SolveStats::default();
    let mut attractor = Attractor::new(game.vertex_count());
    let mut even = game.empty_set();
    let mut odd = game.empty_set();
    let mut residual = game.full();
    let mut cursor = 0;
    while cursor < order.len() {
        let m = game.priority(order[cursor]);
        let mut lowest = game.empty_set();
        while cursor < order.len() && game.priority(order[cursor]) == m {
            if residual.contains(order[cursor]) {
                lowest.insert(order[cursor]);
            }
            cursor += 1;
        }
        if lowest.is_empty() {
            continue;
        }
        for v in &lowest {
            assert!(
                residual.successors(v).all(|w| lowest.contains(w)),
                "lowest-priority set of a weak game must be closed"
            );
        }
        let winner = Player::of_priority(m);
        let won = attractor.compute(&residual, winner, &lowest, &mut stats);
        residual = residual.remove(&won);
        match winner {
            Player::Even => even.union_with(&won),
            Player::Odd => odd.union_with(&won),
        }
    }
    Ok(Solution { even, odd, stats })
}

/// Relabels a dull game into a weak game with the same winning regions.
///
/// Every SCC gets the priority `2·level + b`, where `level` is the longest
/// path from the component to a sink of the condensation and `b` is the
/// parity of the component's highest original priority.
pub fn dull_to_weak(game: &ParityGame) -> Result<ParityGame, ClassError> {
    if let Some(w) = find_mixed_cycles(game) {
        return Err(ClassError::NotDull(w));
    }
    let full = game.full();
    let d = scc_decompose(&full);
    // Condensation edges only go to smaller indices, so ascending order is
    // a valid bottom-up order.
    let mut level = vec![0u32; d.len()];
    let mut out_edges: Vec<Vec<u32>> = vec![Vec::new(); d.len()];
    for &(from, to) in d.condensation_edges() {
        out_edges[from as usize].push(to);
    }
    for i in 0..d.len() {
        level[i] = out_edges[i].iter().map(|&j| level[j as usize] + 1).max().unwrap_or(0);
    }
    let parity: Vec<u32> = (0..d.len())
        .map(|i| {
            let top = d.component(i).iter().map(|&v| game.priority(v)).max().expect("nonempty");
            top % 2
        })
        .collect();
    Ok(game.with_priorities(|v| {
        let c = d.component_of(v).expect("every vertex is live");
        2 * level[c] + parity[c]
    }))
}

/// Dedicated solver for nested solitaire games.
///
/// Takes a final SCC `C` of the residual game; if the player `q` making the
/// choices in `C` (Even when nobody chooses) finds a cycle of its own
/// parity, `q` wins all of `C`, otherwise the opponent does. The winner's
/// attractor to `C` is then removed and the procedure repeats.
pub fn solve_nested_solitaire(game: &ParityGame) -> Result<Solution, ClassError> {
    if let Some((a, b)) = find_scc_choice_conflict(game) {
        return Err(ClassError::NotNestedSolitaire(a, b));
    }
    let mut stats = SolveStats::default();
    let mut attractor = Attractor::new(game.vertex_count());
    let mut even = game.empty_set();
    let mut odd = game.empty_set();
    let mut residual = game.full();
    while !residual.is_empty() {
        let d = scc_decompose(&residual);
        let component = d.component_set(0);
        let h = residual.restrict(&component).expect("nonempty");
        let chooser = h
            .vertices()
            .find(|&v| h.successors(v).nth(1).is_some())
            .map(|v| game.owner(v))
            .unwrap_or(Player::Even);
        let winner = if has_cycle_of_dominant_parity(&h, chooser).is_some() {
            chooser
        } else {
            !chooser
        };
        let won = attractor.compute(&residual, winner, &component, &mut stats);
        residual = residual.remove(&won);
        match winner {
            Player::Even => even.union_with(&won),
            Player::Odd => odd.union_with(&won),
        }
    }
    Ok(Solution { even, odd, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_solitaire, gen_weak, gen_whitegame};
    use crate::game::VertexRecord;
    use crate::zielonka::solve_game_recursive;

    #[test]
    fn weak_family_is_weak_and_dull() {
        let r = classify(&gen_weak(4));
        assert!(r.is_weak && r.is_dull);
        assert!(r.ascending_edge.is_none());
    }

    #[test]
    fn solitaire_family_classes() {
        let g = gen_solitaire(3, false);
        let r = classify(&g);
        assert!(r.is_solitaire && r.is_nested_solitaire && r.is_dull);
        assert_eq!(r.solitaire_owner, Some(Player::Even));
        assert!(!r.is_weak);
        // u1 (id 6, priority 1) -> v1 (id 1, priority 3)
        assert_eq!(r.ascending_edge, Some((VertexId::new(6), VertexId::new(1))));
    }

    #[test]
    fn strong_solitaire_is_not_dull() {
        let r = classify(&gen_solitaire(3, true));
        assert!(r.is_solitaire && !r.is_dull);
        let w = r.mixed_cycles.unwrap();
        assert_eq!(w.even_cycle.iter().map(|&v| gen_solitaire(3, true).priority(v)).max().unwrap() % 2, 0);
    }

    #[test]
    fn whitegame_four_fails_every_class() {
        let g = gen_whitegame(4);
        let r = classify(&g);
        assert!(!r.is_weak && !r.is_dull && !r.is_nested_solitaire && !r.is_solitaire);
        // v2 (box, id 1) and v3 (diamond, id 2) both choose inside the big SCC
        let (a, b) = r.scc_choice_conflict.unwrap();
        assert_ne!(g.owner(a), g.owner(b));
        let w = r.mixed_cycles.unwrap();
        assert!(w.even_cycle.len() >= 2);
    }

    #[test]
    fn cycle_search_on_solitaire_three() {
        let g = gen_solitaire(3, false);
        let even = has_cycle_of_dominant_parity(&g.full(), Player::Even).unwrap();
        assert_eq!(even, vec![VertexId::new(0)]);
        let odd = has_cycle_of_dominant_parity(&g.full(), Player::Odd).unwrap();
        assert_eq!(odd, vec![VertexId::new(6)]);
    }

    #[test]
    fn odd_self_loop_has_no_even_cycle() {
        let g = ParityGame::new(vec![VertexRecord::new(Player::Odd, 3, [0])]).unwrap();
        assert!(has_cycle_of_dominant_parity(&g.full(), Player::Even).is_none());
        assert_eq!(has_cycle_of_dominant_parity(&g.full(), Player::Odd), Some(vec![VertexId::new(0)]));
    }

    #[test]
    fn weak_solver_on_family_and_trivial_game() {
        let g = gen_weak(4);
        let s = solve_weak(&g).unwrap();
        assert!(s.same_regions(&solve_game_recursive(&g).unwrap()));
        let single = ParityGame::new(vec![VertexRecord::new(Player::Even, 0, [0])]).unwrap();
        assert_eq!(solve_weak(&single).unwrap().even.len(), 1);
        assert_eq!(
            solve_weak(&gen_solitaire(1, false)).unwrap_err(),
            ClassError::NotWeak(VertexId::new(2), VertexId::new(1))
        );
    }

    #[test]
    fn dull_conversion_of_solitaire() {
        let g = gen_solitaire(3, false);
        let w = dull_to_weak(&g).unwrap();
        assert!(classify(&w).is_weak);
        let s = solve_weak(&w).unwrap();
        assert_eq!(s.even.len(), 9);
        assert!(matches!(dull_to_weak(&gen_solitaire(2, true)), Err(ClassError::NotDull(_))));
    }

    #[test]
    fn dull_conversion_of_weak_chain_keeps_regions() {
        let g = gen_weak(3);
        let w = dull_to_weak(&g).unwrap();
        assert!(classify(&w).is_weak);
        assert!(solve_weak(&w).unwrap().same_regions(&solve_weak(&g).unwrap()));
    }

    #[test]
    fn nested_solitaire_solver_cases() {
        let g = gen_solitaire(3, true);
        assert_eq!(solve_nested_solitaire(&g).unwrap().even.len(), 9);
        let odd_loop = ParityGame::new(vec![VertexRecord::new(Player::Even, 1, [0])]).unwrap();
        assert_eq!(solve_nested_solitaire(&odd_loop).unwrap().odd.len(), 1);
        assert!(matches!(
            solve_nested_solitaire(&gen_whitegame(4)),
            Err(ClassError::NotNestedSolitaire(_, _))
        ));
    }
}
