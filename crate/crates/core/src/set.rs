//! Dense bitset over the vertex ids of one game.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::game::VertexId;

const BITS: usize = 64;

/// A subset of the vertices `0..universe` of some game.
///
/// Membership tests are constant time; iteration is linear in the number of
/// words. Sets over different universes must not be mixed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(BITS)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet {
            words: vec![u64::MAX; universe.div_ceil(BITS)],
            universe,
        };
        set.trim();
        set
    }

    pub fn from_iter_in<I: IntoIterator<Item = VertexId>>(universe: usize, ids: I) -> Self {
        let mut set = VertexSet::empty(universe);
        for v in ids {
            set.insert(v);
        }
        set
    }

    /// Size of the id space this set lives in (not the cardinality).
    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        let i = v.index();
        i < self.universe && self.words[i / BITS] & (1 << (i % BITS)) != 0
    }

    /// Returns `true` if `v` was not already present.
    #[inline]
    pub fn insert(&mut self, v: VertexId) -> bool {
        let i = v.index();
        debug_assert!(i < self.universe, "vertex {i} outside universe {}", self.universe);
        let word = &mut self.words[i / BITS];
        let mask = 1 << (i % BITS);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    /// Returns `true` if `v` was present.
    #[inline]
    pub fn remove(&mut self, v: VertexId) -> bool {
        let i = v.index();
        if i >= self.universe {
            return false;
        }
        let word = &mut self.words[i / BITS];
        let mask = 1 << (i % BITS);
        let present = *word & mask != 0;
        *word &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    /// Smallest member, found by skipping empty words.
    pub fn first(&self) -> Option<VertexId> {
        self.next_from(0)
    }

    /// Smallest member `>= start`.
    pub fn next_from(&self, start: usize) -> Option<VertexId> {
        if start >= self.universe {
            return None;
        }
        let mut w = start / BITS;
        let mut word = self.words[w] & (u64::MAX << (start % BITS));
        loop {
            if word != 0 {
                return Some(VertexId::new(w * BITS + word.trailing_zeros() as usize));
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    fn trim(&mut self) {
        let rem = self.universe % BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.index())).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(VertexId::new(self.index * BITS + bit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[usize]) -> Vec<VertexId> {
        v.iter().map(|&i| VertexId::new(i)).collect()
    }

    #[test]
    fn insert_remove_and_iterate() {
        let mut s = VertexSet::empty(130);
        for i in [0, 63, 64, 129, 7] {
            assert!(s.insert(VertexId::new(i)));
        }
        assert!(!s.insert(VertexId::new(7)));
        assert_eq!(s.len(), 5);
        assert_eq!(s.to_vec(), ids(&[0, 7, 63, 64, 129]));
        assert!(s.remove(VertexId::new(63)));
        assert_eq!(s.next_from(8), Some(VertexId::new(64)));
        assert_eq!(s.next_from(130), None);
    }

    #[test]
    fn full_set_respects_universe() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(!s.contains(VertexId::new(70)));
        assert!(VertexSet::full(0).is_empty());
        assert_eq!(VertexSet::full(0).first(), None);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter_in(10, ids(&[1, 2, 3]));
        let b = VertexSet::from_iter_in(10, ids(&[3, 4]));
        assert_eq!(a.union(&b).to_vec(), ids(&[1, 2, 3, 4]));
        assert_eq!(a.intersection(&b).to_vec(), ids(&[3]));
        assert_eq!(a.difference(&b).to_vec(), ids(&[1, 2]));
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_disjoint(&b));
    }
}
