use crate::game::Player;
use crate::set::VertexSet;

/// Work counters collected during a solve.
///
/// Recursive calls include invocations on the empty game. Second calls are
/// the recursive calls on `G \ B`; `second_calls_empty` counts those whose
/// argument had no vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub recursive_calls: u64,
    /// Iterations of the per-SCC loop, summed over the whole recursion tree.
    pub for_iterations: u64,
    /// Edges examined by attractor computations.
    pub attractor_edge_visits: u64,
    pub second_calls_total: u64,
    pub second_calls_empty: u64,
    pub max_recursion_depth: u64,
}

impl SolveStats {
    /// Second calls that received a nonempty game.
    pub fn second_calls_nonempty(&self) -> u64 {
        self.second_calls_total - self.second_calls_empty
    }
}

/// Winning regions `(W_even, W_odd)` of a solved game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub even: VertexSet,
    pub odd: VertexSet,
    pub stats: SolveStats,
}

impl Solution {
    pub fn region(&self, player: Player) -> &VertexSet {
        match player {
            Player::Even => &self.even,
            Player::Odd => &self.odd,
        }
    }

    pub fn winner(&self, v: crate::game::VertexId) -> Option<Player> {
        if self.even.contains(v) {
            Some(Player::Even)
        } else if self.odd.contains(v) {
            Some(Player::Odd)
        } else {
            None
        }
    }

    /// Both regions, ignoring stats.
    pub fn same_regions(&self, other: &Solution) -> bool {
        self.even == other.even && self.odd == other.odd
    }

    /// Regions are disjoint and cover exactly `vertices`.
    pub fn is_partition_of(&self, vertices: &VertexSet) -> bool {
        self.even.is_disjoint(&self.odd) && self.even.union(&self.odd) == *vertices
    }
}
