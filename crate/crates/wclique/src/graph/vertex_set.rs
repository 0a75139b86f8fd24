use std::fmt;

/// A set of vertex indices from one graph, backed by a bit vector.
///
/// Iteration is always in ascending index order, which is what makes
/// solver runs and reported cliques deterministic. The set ops used in
/// the search hot path (`intersection`, `iter_and`) work block-wise on
/// `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    blocks: Vec<u64>,
}

#[inline]
fn block_count(nbits: usize) -> usize {
    nbits.div_ceil(64)
}

impl VertexSet {
    /// The empty set over a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            nbits: n,
            blocks: vec![0; block_count(n)],
        }
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for b in 0..s.blocks.len() {
            s.blocks[b] = !0;
        }
        let spare = block_count(n) * 64 - n;
        if spare > 0 {
            let last = s.blocks.len() - 1;
            s.blocks[last] >>= spare;
        }
        s
    }

    /// Build from explicit indices. Panics if an index is >= `n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Size of the universe this set was created over.
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.nbits && self.blocks[i / 64] & (1u64 << (i % 64)) != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.nbits,
            "vertex {i} out of range (capacity {})",
            self.nbits
        );
        self.blocks[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.nbits {
            self.blocks[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// k-th smallest member (0-based).
    pub fn nth(&self, k: usize) -> Option<usize> {
        self.iter().nth(k)
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            other: None,
            block_idx: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    /// Ascending iteration over the intersection with `other`, without
    /// materializing it.
    pub fn iter_and<'a>(&'a self, other: &'a VertexSet) -> Iter<'a> {
        let first = match (self.blocks.first(), other.blocks.first()) {
            (Some(a), Some(b)) => a & b,
            _ => 0,
        };
        Iter {
            blocks: &self.blocks,
            other: Some(&other.blocks),
            block_idx: 0,
            current: first,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (i, b) in self.blocks.iter_mut().enumerate() {
            *b &= other.blocks.get(i).copied().unwrap_or(0);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (i, b) in out.blocks.iter_mut().enumerate() {
            *b |= other.blocks.get(i).copied().unwrap_or(0);
        }
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (i, b) in out.blocks.iter_mut().enumerate() {
            *b &= !other.blocks.get(i).copied().unwrap_or(0);
        }
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(i, &b)| b & !other.blocks.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(i, &b)| b & other.blocks.get(i).copied().unwrap_or(0) == 0)
    }

    /// Members as a sorted vector.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest member, if any.
    pub fn max_member(&self) -> Option<usize> {
        for (i, &b) in self.blocks.iter().enumerate().rev() {
            if b != 0 {
                return Some(i * 64 + 63 - b.leading_zeros() as usize);
            }
        }
        None
    }
}

pub struct Iter<'a> {
    blocks: &'a [u64],
    other: Option<&'a [u64]>,
    block_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.block_idx += 1;
            if self.block_idx >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.block_idx];
            if let Some(other) = self.other {
                self.current &= other.get(self.block_idx).copied().unwrap_or(0);
            }
        }
        let tz = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.block_idx * 64 + tz)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
