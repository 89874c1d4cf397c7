//! Dense bit sets over a fixed finite universe.
//!
//! Every structure in this crate identifies its elements with indices
//! `0..n`. Subsets, order relations, element classes, and open-set
//! families are all stored as bit sets over that index range.

use std::fmt;

const BITS: usize = 64;

/// A subset of `{0, .., len-1}`, packed into 64-bit blocks.
///
/// The derived `Ord` (universe size, then blocks lexicographically) is
/// used wherever a deterministic ordering of subsets is needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet {
    len: usize,
    blocks: Vec<u64>,
}

impl BitSet {
    pub fn empty(len: usize) -> Self {
        BitSet {
            len,
            blocks: vec![0; len.div_ceil(BITS)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::empty(len);
        for b in s.blocks.iter_mut() {
            *b = u64::MAX;
        }
        s.mask_tail();
        s
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = BitSet::empty(len);
        s.insert(i);
        s
    }

    pub fn of<I: IntoIterator<Item = usize>>(len: usize, items: I) -> Self {
        let mut s = BitSet::empty(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Size of the universe, not of the subset.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] &= !(1 << (i % BITS));
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn complement(&self) -> BitSet {
        let mut s = BitSet {
            len: self.len,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        s.mask_tail();
        s
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &b)| {
            (0..BITS)
                .filter(move |o| b >> o & 1 == 1)
                .map(move |o| bi * BITS + o)
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn mask_tail(&mut self) {
        let rem = self.len % BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = BitSet::empty(70);
        a.insert(0);
        a.insert(65);
        assert!(a.contains(0) && a.contains(65) && !a.contains(1));
        assert_eq!(a.count(), 2);
        let b = BitSet::of(70, [0, 1]);
        assert_eq!(a.intersection(&b), BitSet::singleton(70, 0));
        assert_eq!(a.union(&b).count(), 3);
        assert!(BitSet::singleton(70, 0).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn complement_respects_universe() {
        let a = BitSet::of(5, [1, 3]);
        let c = a.complement();
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(c.complement(), a);
        assert_eq!(BitSet::full(5).count(), 5);
    }

    #[test]
    fn iteration_order() {
        let a = BitSet::of(130, [129, 5, 64]);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![5, 64, 129]);
        assert_eq!(a.first(), Some(5));
    }
}
