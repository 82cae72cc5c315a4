//! Dense bit vectors over F2 and Gaussian elimination on them.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (k, &b) in bits.iter().enumerate() {
            if b {
                v.set(k, true);
            }
        }
        v
    }

    /// Vector with ones exactly at `ones`.
    pub fn from_support(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &k in ones {
            v.flip(k);
        }
        v
    }

    /// Low `len` bits of `mask` (requires `len <= 64`).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = if len == 64 { mask } else { mask & ((1 << len) - 1) };
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, k: usize) -> bool {
        assert!(k < self.len);
        self.words[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn set(&mut self, k: usize, bit: bool) {
        assert!(k < self.len);
        if bit {
            self.words[k / 64] |= 1 << (k % 64);
        } else {
            self.words[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn flip(&mut self, k: usize) {
        assert!(k < self.len);
        self.words[k / 64] ^= 1 << (k % 64);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&k| self.get(k))
    }

    fn leading(&self) -> Option<usize> {
        self.ones().next()
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len).map(|k| if self.get(k) { '1' } else { '0' }).collect();
        write!(f, "F2[{bits}]")
    }
}

/// Rank over F2 of a set of vectors of equal length.
pub fn rank(vectors: &[F2Vector]) -> usize {
    let mut basis: Vec<(usize, F2Vector)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (pivot, b) in &basis {
            if v.get(*pivot) {
                v.xor_assign(b);
            }
        }
        if let Some(p) = v.leading() {
            for (_, b) in basis.iter_mut() {
                if b.get(p) {
                    b.xor_assign(&v);
                }
            }
            basis.push((p, v));
        }
    }
    basis.len()
}
