//! Named game families and seeded random games.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::{gen_solitaire, gen_weak, gen_whitegame};
use crate::game::{ParityGame, Player, Priority, VertexRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Weak,
    Solitaire,
    SolitaireStrong,
    Whitegame,
    Random,
    RandomWeak,
    RandomDull,
    RandomSolitaire,
    RandomNestedSolitaire,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Weak,
        Family::Solitaire,
        Family::SolitaireStrong,
        Family::Whitegame,
        Family::Random,
        Family::RandomWeak,
        Family::RandomDull,
        Family::RandomSolitaire,
        Family::RandomNestedSolitaire,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Weak => "weak",
            Family::Solitaire => "solitaire",
            Family::SolitaireStrong => "solitaire-strong",
            Family::Whitegame => "whitegame",
            Family::Random => "random",
            Family::RandomWeak => "random-weak",
            Family::RandomDull => "random-dull",
            Family::RandomSolitaire => "random-solitaire",
            Family::RandomNestedSolitaire => "random-nested-solitaire",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(
            self,
            Family::Random
                | Family::RandomWeak
                | Family::RandomDull
                | Family::RandomSolitaire
                | Family::RandomNestedSolitaire
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFamily;

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown game family")
    }
}

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or(UnknownFamily)
    }
}

/// Which family to build, its size parameter and (for random families) the
/// seed. For random families `n` is the number of vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    /// Out-degree cap for random families.
    pub max_out_degree: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            seed: 0,
            max_out_degree: 3,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn generate(&self) -> ParityGame {
        match self.family {
            Family::Weak => gen_weak(self.n),
            Family::Solitaire => gen_solitaire(self.n, false),
            Family::SolitaireStrong => gen_solitaire(self.n, true),
            Family::Whitegame => gen_whitegame(self.n),
            _ => gen_random(self),
        }
    }
}

/// Seeded random game. Structure depends on the family:
///
/// * `Random`: arbitrary owners, priorities and edges;
/// * `RandomWeak`: every edge goes to a priority no higher than its source;
/// * `RandomDull`: SCC blocks joined acyclically, each either a plain ring
///   (a single cycle) or a denser block whose priorities share one parity;
/// * `RandomSolitaire`: every vertex with several successors has one owner;
/// * `RandomNestedSolitaire`: blocks as above, choices within a block are
///   made by the block's owner.
pub fn gen_random(spec: &FamilySpec) -> ParityGame {
    assert!(spec.n >= 1, "random games need at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ ((spec.family as u64) << 56));
    let n = spec.n;
    let degree = spec.max_out_degree.max(1);
    let records = match spec.family {
        Family::Random => random_general(&mut rng, n, degree, None),
        Family::RandomSolitaire => {
            let chooser = random_player(&mut rng);
            random_general(&mut rng, n, degree, Some(chooser))
        }
        Family::RandomWeak => random_weak(&mut rng, n, degree),
        Family::RandomDull => random_blocks(&mut rng, n, degree, BlockStyle::Dull),
        Family::RandomNestedSolitaire => random_blocks(&mut rng, n, degree, BlockStyle::NestedSolitaire),
        _ => unreachable!("deterministic families are generated directly"),
    };
    ParityGame::new(records).expect("random games are total by construction")
}

fn random_player(rng: &mut ChaCha8Rng) -> Player {
    if rng.gen_bool(0.5) {
        Player::Even
    } else {
        Player::Odd
    }
}

fn random_priority(rng: &mut ChaCha8Rng, n: usize) -> Priority {
    rng.gen_range(0..=n as Priority)
}

fn pick_targets(rng: &mut ChaCha8Rng, candidates: &[usize], count: usize) -> Vec<usize> {
    candidates.choose_multiple(rng, count.min(candidates.len())).copied().collect()
}

fn random_general(rng: &mut ChaCha8Rng, n: usize, degree: usize, chooser: Option<Player>) -> Vec<VertexRecord> {
    let all: Vec<usize> = (0..n).collect();
    (0..n)
        .map(|_| {
            let k = rng.gen_range(1..=degree.min(n));
            let successors = pick_targets(rng, &all, k);
            let owner = match chooser {
                Some(q) if successors.len() >= 2 => q,
                _ => random_player(rng),
            };
            VertexRecord::new(owner, random_priority(rng, n), successors)
        })
        .collect()
}

fn random_weak(rng: &mut ChaCha8Rng, n: usize, degree: usize) -> Vec<VertexRecord> {
    let priorities: Vec<Priority> = (0..n).map(|_| random_priority(rng, n)).collect();
    (0..n)
        .map(|v| {
            // Never empty: v itself qualifies.
            let candidates: Vec<usize> = (0..n).filter(|&w| priorities[w] <= priorities[v]).collect();
            let k = rng.gen_range(1..=degree.min(candidates.len()));
            VertexRecord::new(random_player(rng), priorities[v], pick_targets(rng, &candidates, k))
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BlockStyle {
    Dull,
    NestedSolitaire,
}

fn random_blocks(rng: &mut ChaCha8Rng, n: usize, degree: usize, style: BlockStyle) -> Vec<VertexRecord> {
    let mut records: Vec<VertexRecord> = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let size = rng.gen_range(1..=3usize.min(n - start));
        let block: Vec<usize> = (start..start + size).collect();
        let below: Vec<usize> = (0..start).collect();
        // A lone vertex without a self-loop is only allowed above another block.
        let cyclic = start == 0 || size > 1 || rng.gen_bool(0.5);
        let dense = cyclic && rng.gen_bool(0.5);
        let block_parity: Priority = rng.gen_range(0..=1);
        let block_owner = random_player(rng);

        for pos in 0..size {
            let mut internal = Vec::new();
            if cyclic {
                internal.push(block[(pos + 1) % size]);
                if dense {
                    let extra = rng.gen_range(0..degree);
                    internal.extend(pick_targets(rng, &block, extra));
                }
            }
            internal.sort_unstable();
            internal.dedup();
            let room = degree.saturating_sub(internal.len());
            let mut external = Vec::new();
            if !below.is_empty() {
                let wanted = if cyclic { rng.gen_range(0..=room) } else { rng.gen_range(1..=degree) };
                external = pick_targets(rng, &below, wanted);
            }

            let priority = match style {
                BlockStyle::Dull if dense => {
                    // Same parity throughout, so every cycle of the block agrees.
                    let half = rng.gen_range(0..=(n as Priority) / 2);
                    2 * half + block_parity
                }
                _ => random_priority(rng, n),
            };
            let owner = match style {
                BlockStyle::NestedSolitaire if internal.len() >= 2 => block_owner,
                _ => random_player(rng),
            };
            let mut successors = internal;
            successors.extend(external);
            records.push(VertexRecord::new(owner, priority, successors));
        }
        start += size;
    }
    records
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::classify;

    #[test]
    fn same_spec_same_game() {
        for family in Family::ALL.into_iter().filter(|f| f.is_random()) {
            let spec = FamilySpec::new(family, 8).with_seed(42);
            assert_eq!(spec.generate(), spec.generate());
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>(), Ok(f));
        }
        assert_eq!("random_weak".parse::<Family>(), Ok(Family::RandomWeak));
        assert!("friedmann".parse::<Family>().is_err());
    }

    #[test]
    fn random_variants_satisfy_their_class() {
        for seed in 0..300 {
            for n in 1..=8 {
                let weak = FamilySpec::new(Family::RandomWeak, n).with_seed(seed).generate();
                assert!(classify(&weak).is_weak, "seed {seed}");
                let dull = FamilySpec::new(Family::RandomDull, n).with_seed(seed).generate();
                assert!(classify(&dull).is_dull, "seed {seed}");
                let sol = FamilySpec::new(Family::RandomSolitaire, n).with_seed(seed).generate();
                assert!(classify(&sol).is_solitaire, "seed {seed}");
                let nested = FamilySpec::new(Family::RandomNestedSolitaire, n).with_seed(seed).generate();
                assert!(classify(&nested).is_nested_solitaire, "seed {seed}");
            }
        }
    }

    #[test]
    fn random_games_are_total_and_bounded() {
        for seed in 0..200 {
            let g = FamilySpec::new(Family::Random, 8).with_seed(seed).generate();
            assert_eq!(g.vertex_count(), 8);
            assert!(g.full().is_total());
            assert!(g.vertices().all(|v| (1..=3).contains(&g.successors(v).len())));
        }
    }

    #[test]
    fn block_generators_keep_out_degree_small() {
        for seed in 0..200 {
            for family in [Family::RandomDull, Family::RandomNestedSolitaire] {
                let g = FamilySpec::new(family, 8).with_seed(seed).generate();
                assert!(g.vertices().all(|v| g.successors(v).len() <= 3), "{family} seed {seed}");
            }
        }
    }

    #[test]
    fn vec_helper_picks_distinct_targets() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let picked = pick_targets(&mut rng, &[1, 2, 3], 5);
        assert_eq!(picked.len(), 3);
    }
}
