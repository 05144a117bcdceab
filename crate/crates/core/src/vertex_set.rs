//! Bitset of vertex ids.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of vertex ids stored as a bitset.
///
/// The word vector never carries trailing zero words, so two sets with the
/// same members compare and hash equal regardless of how they were built.
/// Sets over graphs of order up to 128 never touch the heap.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::new();
        let whole = n / WORD;
        words.extend(std::iter::repeat_n(u64::MAX, whole));
        let rest = n % WORD;
        if rest != 0 {
            words.push((1u64 << rest) - 1);
        }
        Self { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Adds `v`; returns `true` if it was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    /// Removes `v`; returns `true` if it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.words.len() {
            return false;
        }
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w >> (v % WORD) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.words
            .last()
            .map(|w| (self.words.len() - 1) * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
        self.trim();
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
        self.trim();
    }

    /// Size of `self ∩ other` without materialising it.
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    /// True when every member is below `n`.
    pub fn within(&self, n: usize) -> bool {
        self.last().is_none_or(|m| m < n)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }
}

/// Sets order by their sorted member sequences, compared lexicographically.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
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

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        Ok(members.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::from([1, 5, 70]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(70));
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.last(), Some(70));
        assert!(s.remove(70));
        assert_eq!(s, VertexSet::from([5, 1]));
        assert_eq!(s.to_string(), "{1,5}");
        assert_eq!(VertexSet::full(3).complement(3), VertexSet::new());
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::from([0, 2]).complement(4), VertexSet::from([1, 3]));
    }

    #[test]
    fn order_is_lexicographic_on_sorted_members() {
        assert!(VertexSet::from([0, 1, 3]) < VertexSet::from([0, 2, 3]));
        assert!(VertexSet::from([1, 2, 5]) < VertexSet::from([2, 3, 4]));
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(a in proptest::collection::btree_set(0usize..150, 0..40),
                                        b in proptest::collection::btree_set(0usize..150, 0..40)) {
            let sa: VertexSet = a.iter().copied().collect();
            let sb: VertexSet = b.iter().copied().collect();
            prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection(&sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.difference(&sb).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection_len(&sb), a.intersection(&b).count());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
            prop_assert_eq!(sa.cmp(&sb), a.iter().cmp(b.iter()));
        }
    }
}
