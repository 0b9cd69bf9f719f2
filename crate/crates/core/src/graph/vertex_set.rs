use std::fmt;

use serde::{Serialize, Serializer};

/// Subset of `{1, ..., 64}` stored as a bit mask (bit `v - 1` for vertex `v`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub(crate) u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        VertexSet(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    /// `{a, ..., b}`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Self {
        if a > b || a == 0 {
            return VertexSet::EMPTY;
        }
        VertexSet(VertexSet::full(b).0 & !VertexSet::full(a - 1).0)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet::EMPTY.with(v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        assert!((1..=64).contains(&v), "vertex {v} out of range");
        VertexSet(self.0 | 1 << (v - 1))
    }

    pub fn without(self, v: usize) -> Self {
        if !(1..=64).contains(&v) {
            return self;
        }
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
