//! Sets of vertex indices packed into a 128-bit word.
//!
//! All complexes handled here live on at most 128 vertices, so a fixed-width
//! bit set keeps the set algebra branch-free and hashable.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u128);

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
        let mut bits = 0u128;
        for v in it {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1u128 << v;
        }
        VertexSet(bits)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn remove(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// Vertices in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets obtained by dropping exactly one vertex.
    pub fn boundary_faces(self) -> impl Iterator<Item = VertexSet> {
        self.iter().map(move |v| self.remove(v))
    }

    /// All subsets, including the empty set and the set itself.
    pub fn subsets(self) -> Vec<VertexSet> {
        let vs = self.to_vec();
        let mut out = Vec::with_capacity(1 << vs.len());
        out.push(VertexSet::EMPTY);
        for &v in &vs {
            for i in 0..out.len() {
                out.push(out[i].insert(v));
            }
        }
        out
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet::from_vertices(it)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices([0, 2, 5]);
        let b = VertexSet::from_vertices([2, 3]);
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 5]);
        assert!(VertexSet::from_vertices([2]).is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn iteration_is_increasing() {
        let s = VertexSet::from_vertices([9, 1, 127, 64]);
        assert_eq!(s.to_vec(), vec![1, 9, 64, 127]);
        assert_eq!(s.min_vertex(), Some(1));
        assert_eq!(s.max_vertex(), Some(127));
    }

    #[test]
    fn subsets_of_triangle() {
        let s = VertexSet::from_vertices([0, 1, 2]);
        let mut subs = s.subsets();
        subs.sort();
        subs.dedup();
        assert_eq!(subs.len(), 8);
    }
}
