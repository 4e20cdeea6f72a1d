//! Parity game model: players, vertices, total games and subgame views.
//!
//! A [`ParityGame`] is immutable once built. Subgames are [`Subgame`] views
//! (parent game plus a live-vertex mask) so that the recursive solvers can
//! create nested subgames without copying the graph.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Not;

use thiserror::Error;

use crate::set::VertexSet;

pub type Priority = u32;

/// The two players. `Even` is the diamond player, `Odd` the box player.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    #[inline]
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player favoured by a priority under the max-parity condition.
    #[inline]
    pub fn of_priority(priority: Priority) -> Player {
        if priority.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }

    /// PGSolver owner encoding: 0 is Even, 1 is Odd.
    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }
}

impl Not for Player {
    type Output = Player;

    fn not(self) -> Player {
        self.opponent()
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => f.write_str("even"),
            Player::Odd => f.write_str("odd"),
        }
    }
}

/// Dense vertex index in `[0, |V|)`. Subgames keep the parent's ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u32);

impl VertexId {
    #[inline]
    pub fn new(index: usize) -> Self {
        debug_assert!(index <= u32::MAX as usize);
        VertexId(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("vertex {0} has no successors")]
    EmptySuccessors(VertexId),
    #[error("edge {0} -> {1} points outside the game")]
    DanglingEdge(VertexId, usize),
    #[error("restriction to the empty set")]
    EmptyRestriction,
    #[error("vertex {0} is not part of the subgame")]
    OutsideSubgame(VertexId),
    #[error("the game has no vertices")]
    EmptyGame,
}

/// Input record for one vertex when building a game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRecord {
    pub owner: Player,
    pub priority: Priority,
    pub successors: Vec<usize>,
}

impl VertexRecord {
    pub fn new(owner: Player, priority: Priority, successors: impl IntoIterator<Item = usize>) -> Self {
        VertexRecord {
            owner,
            priority,
            successors: successors.into_iter().collect(),
        }
    }
}

/// A finite parity game with a total edge relation (max-parity convention).
///
/// Edges are stored in compressed adjacency form in both directions.
/// Successor lists are sorted and free of duplicates.
#[derive(Clone, PartialEq, Eq)]
pub struct ParityGame {
    owners: Vec<Player>,
    priorities: Vec<Priority>,
    succ_start: Vec<u32>,
    succ: Vec<VertexId>,
    pred_start: Vec<u32>,
    pred: Vec<VertexId>,
    priority_count: usize,
    /// Ids are ordered by non-increasing priority.
    descending: bool,
}

impl ParityGame {
    /// Builds a game from per-vertex records; vertex `i` is `records[i]`.
    ///
    /// Multi-edges collapse to one edge; self-loops are kept.
    pub fn new(records: Vec<VertexRecord>) -> Result<Self, GameError> {
        let n = records.len();
        let mut succ_start = Vec::with_capacity(n + 1);
        let mut succ = Vec::new();
        let mut owners = Vec::with_capacity(n);
        let mut priorities = Vec::with_capacity(n);
        succ_start.push(0);
        for (i, record) in records.into_iter().enumerate() {
            let v = VertexId::new(i);
            if record.successors.is_empty() {
                return Err(GameError::EmptySuccessors(v));
            }
            let mut targets = record.successors;
            targets.sort_unstable();
            targets.dedup();
            if let Some(&w) = targets.iter().find(|&&w| w >= n) {
                return Err(GameError::DanglingEdge(v, w));
            }
            succ.extend(targets.into_iter().map(VertexId::new));
            succ_start.push(succ.len() as u32);
            owners.push(record.owner);
            priorities.push(record.priority);
        }

        // Transpose via counting sort, which keeps predecessor lists sorted.
        let mut in_degree = vec![0u32; n + 1];
        for w in &succ {
            in_degree[w.index() + 1] += 1;
        }
        for i in 0..n {
            in_degree[i + 1] += in_degree[i];
        }
        let pred_start = in_degree.clone();
        let mut fill = in_degree;
        let mut pred = vec![VertexId::new(0); succ.len()];
        for v in 0..n {
            for w in &succ[succ_start[v] as usize..succ_start[v + 1] as usize] {
                let slot = &mut fill[w.index()];
                pred[*slot as usize] = VertexId::new(v);
                *slot += 1;
            }
        }

        let mut distinct = priorities.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let descending = priorities.windows(2).all(|w| w[0] >= w[1]);

        Ok(ParityGame {
            owners,
            priorities,
            succ_start,
            succ,
            pred_start,
            pred,
            priority_count: distinct.len(),
            descending,
        })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.owners.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.succ.len()
    }

    /// Number of distinct priorities, `d`.
    pub fn priority_count(&self) -> usize {
        self.priority_count
    }

    #[inline]
    pub fn owner(&self, v: VertexId) -> Player {
        self.owners[v.index()]
    }

    #[inline]
    pub fn priority(&self, v: VertexId) -> Priority {
        self.priorities[v.index()]
    }

    #[inline]
    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.succ[self.succ_start[v.index()] as usize..self.succ_start[v.index() + 1] as usize]
    }

    #[inline]
    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.pred[self.pred_start[v.index()] as usize..self.pred_start[v.index() + 1] as usize]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId::new)
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |v| self.successors(v).iter().map(move |&w| (v, w)))
    }

    /// Whether ids are laid out by non-increasing priority.
    pub fn is_priority_descending(&self) -> bool {
        self.descending
    }

    pub fn records(&self) -> Vec<VertexRecord> {
        self.vertices()
            .map(|v| VertexRecord {
                owner: self.owner(v),
                priority: self.priority(v),
                successors: self.successors(v).iter().map(|w| w.index()).collect(),
            })
            .collect()
    }

    /// The same game with every priority replaced by `relabel(v)`.
    pub fn with_priorities(&self, mut relabel: impl FnMut(VertexId) -> Priority) -> ParityGame {
        let records = self
            .vertices()
            .map(|v| VertexRecord {
                priority: relabel(v),
                ..self.records_of(v)
            })
            .collect();
        ParityGame::new(records).expect("relabelling keeps the graph total")
    }

    /// Adds the given edges to a copy of this game.
    pub fn with_extra_edges(&self, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> ParityGame {
        let mut records = self.records();
        for (v, w) in edges {
            records[v.index()].successors.push(w.index());
        }
        ParityGame::new(records).expect("adding edges keeps the graph total")
    }

    /// Relabels vertices so that ids follow non-increasing priority (stable
    /// on ties). Returns the new game and `original[new_id] = old_id`.
    pub fn sorted_by_priority(&self) -> (ParityGame, Vec<VertexId>) {
        let mut original: Vec<VertexId> = self.vertices().collect();
        original.sort_by(|a, b| self.priority(*b).cmp(&self.priority(*a)).then(a.cmp(b)));
        let mut renamed = vec![0usize; self.vertex_count()];
        for (new, old) in original.iter().enumerate() {
            renamed[old.index()] = new;
        }
        let records = original
            .iter()
            .map(|&old| VertexRecord {
                owner: self.owner(old),
                priority: self.priority(old),
                successors: self.successors(old).iter().map(|w| renamed[w.index()]).collect(),
            })
            .collect();
        let game = ParityGame::new(records).expect("relabelling keeps the graph total");
        (game, original)
    }

    /// View of the whole game.
    pub fn full(&self) -> Subgame<'_> {
        Subgame {
            game: self,
            live: VertexSet::full(self.vertex_count()),
            len: self.vertex_count(),
        }
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn set_of(&self, ids: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_iter_in(self.vertex_count(), ids.into_iter().map(VertexId::new))
    }

    fn records_of(&self, v: VertexId) -> VertexRecord {
        VertexRecord {
            owner: self.owner(v),
            priority: self.priority(v),
            successors: self.successors(v).iter().map(|w| w.index()).collect(),
        }
    }
}

impl fmt::Debug for ParityGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParityGame")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edge_count())
            .field("priorities", &self.priority_count)
            .finish()
    }
}

/// A (pseudo) parity game `G ∩ A`: a parent game restricted to a live set.
///
/// Totality is not guaranteed; see [`Subgame::is_total`].
#[derive(Clone)]
pub struct Subgame<'g> {
    game: &'g ParityGame,
    live: VertexSet,
    len: usize,
}

impl<'g> Subgame<'g> {
    pub fn empty(game: &'g ParityGame) -> Self {
        Subgame {
            game,
            live: game.empty_set(),
            len: 0,
        }
    }

    /// View over an arbitrary vertex set of `game`.
    pub fn from_set(game: &'g ParityGame, live: VertexSet) -> Self {
        debug_assert_eq!(live.universe(), game.vertex_count());
        let len = live.len();
        Subgame { game, live, len }
    }

    #[inline]
    pub fn game(&self) -> &'g ParityGame {
        self.game
    }

    #[inline]
    pub fn live(&self) -> &VertexSet {
        &self.live
    }

    pub fn into_live(self) -> VertexSet {
        self.live
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.live.contains(v)
    }

    pub fn vertices(&self) -> crate::set::Iter<'_> {
        self.live.iter()
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.game
            .successors(v)
            .iter()
            .copied()
            .filter(move |w| self.live.contains(*w))
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.game
            .predecessors(v)
            .iter()
            .copied()
            .filter(move |w| self.live.contains(*w))
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.successors(v).count()).sum()
    }

    /// `G ∩ A`. `A` must be a nonempty subset of the live vertices.
    pub fn restrict(&self, a: &VertexSet) -> Result<Subgame<'g>, GameError> {
        if let Some(v) = a.difference(&self.live).first() {
            return Err(GameError::OutsideSubgame(v));
        }
        let len = a.len();
        if len == 0 {
            return Err(GameError::EmptyRestriction);
        }
        Ok(Subgame {
            game: self.game,
            live: a.clone(),
            len,
        })
    }

    /// `G \ A`. Vertices of `A` outside the view are ignored.
    pub fn remove(&self, a: &VertexSet) -> Subgame<'g> {
        let live = self.live.difference(a);
        let len = live.len();
        Subgame {
            game: self.game,
            live,
            len,
        }
    }

    /// True iff every live vertex keeps a live successor.
    pub fn is_total(&self) -> bool {
        self.first_dead_end().is_none()
    }

    pub fn first_dead_end(&self) -> Option<VertexId> {
        self.vertices().find(|&v| self.successors(v).next().is_none())
    }

    pub fn max_priority(&self) -> Result<Priority, GameError> {
        if self.game.descending {
            let first = self.live.first().ok_or(GameError::EmptyGame)?;
            return Ok(self.game.priority(first));
        }
        self.vertices()
            .map(|v| self.game.priority(v))
            .max()
            .ok_or(GameError::EmptyGame)
    }

    pub fn min_priority(&self) -> Result<Priority, GameError> {
        self.vertices()
            .map(|v| self.game.priority(v))
            .min()
            .ok_or(GameError::EmptyGame)
    }

    /// `{v | P(v) = m}` among the live vertices.
    pub fn vertices_with_priority(&self, m: Priority) -> VertexSet {
        let mut out = self.game.empty_set();
        if self.game.descending {
            let prios = &self.game.priorities;
            // First id whose priority is <= m, then walk the run of m's.
            let start = prios.partition_point(|&p| p > m);
            let mut next = self.live.next_from(start);
            while let Some(v) = next {
                if self.game.priority(v) != m {
                    break;
                }
                out.insert(v);
                next = self.live.next_from(v.index() + 1);
            }
        } else {
            for v in self.vertices() {
                if self.game.priority(v) == m {
                    out.insert(v);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Subgame<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgame").field("live", &self.live).finish()
    }
}
