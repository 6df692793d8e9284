//! Fixed-universe vertex sets backed by machine words.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::GraphError;

type Words = SmallVec<[u64; 1]>;

/// A subset of the vertices `0..host_size` of some host graph.
///
/// Binary operations require both operands to share a host size; mixing
/// universes is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    host_size: usize,
    words: Words,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn empty(host_size: usize) -> Self {
        VertexSet {
            host_size,
            words: SmallVec::from_elem(0, word_count(host_size)),
        }
    }

    pub fn full(host_size: usize) -> Self {
        let mut s = Self::empty(host_size);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let bits = (host_size - lo).min(64);
            *w = if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    pub fn singleton(host_size: usize, v: usize) -> Self {
        let mut s = Self::empty(host_size);
        s.insert(v);
        s
    }

    /// Builds a set from members, rejecting any identifier outside the host.
    pub fn try_from_members<I>(host_size: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(host_size);
        for v in members {
            if v >= host_size {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: host_size,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Like [`VertexSet::try_from_members`] but panics on out-of-range members.
    pub fn from_members<I>(host_size: usize, members: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(host_size);
        for v in members {
            s.insert(v);
        }
        s
    }

    pub fn host_size(&self) -> usize {
        self.host_size
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.host_size && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Panics if `v` is outside the host.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.host_size,
            "vertex {v} outside host of size {}",
            self.host_size
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.host_size {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    /// `self + v`.
    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    /// `self - v`.
    pub fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

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

    /// Complement within the host.
    pub fn complement(&self) -> Self {
        let mut s = Self::full(self.host_size);
        for (a, b) in s.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        s
    }

    fn check_host(&self, other: &Self) {
        assert_eq!(
            self.host_size, other.host_size,
            "vertex sets over different hosts"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_host(other);
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_host(other);
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_host(other);
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_host(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_host(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_host(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Size of `self ∩ other` without allocating.
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_host(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_host(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_host(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
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

impl BitOr for &VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: &VertexSet) -> VertexSet {
        self.union(rhs)
    }
}

impl BitAnd for &VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: &VertexSet) -> VertexSet {
        self.intersection(rhs)
    }
}

impl Sub for &VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        self.difference(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
