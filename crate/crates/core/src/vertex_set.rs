use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of distinct vertex ids a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A finite set of small vertex ids (`0..64`) stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Panics if `v >= MAX_VERTICES`.
    #[inline]
    pub fn singleton(v: u32) -> Self {
        assert!((v as usize) < MAX_VERTICES, "vertex id {v} out of range");
        VertexSet(1u64 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: u32) -> bool {
        (v as usize) < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: u32) {
        *self = self.with(v);
    }

    #[inline]
    pub fn remove(&mut self, v: u32) {
        *self = self.without(v);
    }

    #[inline]
    pub fn with(self, v: u32) -> Self {
        self.union(Self::singleton(v))
    }

    #[inline]
    pub fn without(self, v: u32) -> Self {
        self.difference(Self::singleton(v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// Canonical order: by cardinality, then lexicographically on the
    /// increasing member lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        iter.into_iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }
}

impl<'a> FromIterator<&'a u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a u32>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = u32;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Subset enumeration by the standard `(s - u) & u` trick.
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.universe) & self.universe;
        self.next = (succ != 0).then_some(succ);
        Some(VertexSet(cur))
    }
}

/// Sort in canonical order and drop duplicates.
pub(crate) fn canonicalize(sets: &mut Vec<VertexSet>) {
    sets.sort_by(VertexSet::canonical_cmp);
    sets.dedup();
}

/// Keep the inclusion-maximal members (deduplicated, canonical order).
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.canonical_cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    canonicalize(&mut kept);
    kept
}

/// Keep the inclusion-minimal members (deduplicated, canonical order).
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    canonicalize(&mut sets);
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}
