//! Fixed-universe bit sets used to represent subsets of a code's words.
//!
//! A code keeps its words in a canonical order, so a subset of the code is a
//! set of word indices. Trunks, ring elements and preimages are all stored
//! this way.

use smallvec::SmallVec;

const BLOCK: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WordSet {
    len: usize,
    blocks: SmallVec<[u64; 2]>,
}

impl WordSet {
    pub fn empty(len: usize) -> Self {
        WordSet {
            len,
            blocks: SmallVec::from_elem(0, len.div_ceil(BLOCK)),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Universe size.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "index {i} outside universe of {}", self.len);
        self.blocks[i / BLOCK] |= 1 << (i % BLOCK);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len);
        self.blocks[i / BLOCK] &= !(1 << (i % BLOCK));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.blocks[i / BLOCK] & (1 << (i % BLOCK)) != 0
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &WordSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &WordSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &WordSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn symmetric_difference_with(&mut self, other: &WordSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn intersection(&self, other: &WordSet) -> WordSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn complement(&self) -> WordSet {
        let mut out = WordSet::full(self.len);
        for (a, b) in out.blocks.iter_mut().zip(&self.blocks) {
            *a &= !b;
        }
        out
    }

    /// Indices of members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(bi * BLOCK + t)
            })
        })
    }
}
