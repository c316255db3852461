//! Bit vectors over GF(2) and their spans.

use alloc::vec::Vec;

/// A vector over GF(2) of fixed length, packed into `u64` blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    blocks: Vec<u64>,
}

impl BitVector {
    pub fn zero(len: usize) -> Self {
        BitVector { len, blocks: alloc::vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.blocks[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize, v: bool) {
        if self.get(i) != v {
            self.flip(i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    /// Index of the highest set bit.
    pub fn leading(&self) -> Option<usize> {
        self.blocks
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &b)| b != 0)
            .map(|(k, &b)| 64 * k + 63 - b.leading_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }
}

/// A subspace of GF(2)^n kept in echelon form (distinct leading bits).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Span {
    basis: Vec<BitVector>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &BitVector) -> BitVector {
        let mut v = v.clone();
        // basis is sorted by decreasing leading bit
        for b in &self.basis {
            let lead = b.leading().expect("basis vectors are nonzero");
            if v.get(lead) {
                v.xor_assign(b);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        let r = self.reduce(v);
        let Some(lead) = r.leading() else { return false };
        let at = self.basis.partition_point(|b| b.leading() > Some(lead));
        self.basis.insert(at, r);
        true
    }
}
