//! Bit sets over the element indices of a single group.

use std::cmp::Ordering;
use std::fmt;

use crate::group::ElementId;

/// A set of element indices of a group of a fixed order.
///
/// Sets built for the same group always have the same word length, so the
/// derived equality and hashing agree with set equality. Ordering compares
/// the sets as unsigned integers (bit `i` has weight `2^i`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(64).max(1)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for a in 0..universe {
            s.insert(a);
        }
        s
    }

    pub fn from_elements<I: IntoIterator<Item = ElementId>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for a in items {
            s.insert(a);
        }
        s
    }

    /// Size of the ambient group.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, a: ElementId) -> bool {
        assert!(a < self.universe, "element {a} outside universe {}", self.universe);
        let (w, b) = (a / 64, a % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, a: ElementId) -> bool {
        a < self.universe && self.words[a / 64] & (1 << (a % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.universe).filter(move |&a| self.contains(a))
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<ElementId> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "element sets of different groups");
        ElementSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            self.words
                .iter()
                .rev()
                .cmp(other.words.iter().rev())
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
