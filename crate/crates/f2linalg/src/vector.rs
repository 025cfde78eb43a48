//! Packed column vectors over F₂.

use std::fmt;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A vector over F₂ stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    /// The zero vector of length `len`.
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    /// The standard basis vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from 0/1 entries.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (idx, &bit) in bits.iter().enumerate() {
            if bit & 1 == 1 {
                v.set(idx, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` with ones at the given positions.
    /// Repeated positions cancel.
    pub fn from_ones<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for idx in ones {
            v.toggle(idx);
        }
        v
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "index {index} out of range for length {}", self.len);
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "index {index} out of range for length {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    pub fn toggle(&mut self, index: usize) {
        assert!(index < self.len, "index {index} out of range for length {}", self.len);
        self.words[index / WORD_BITS] ^= 1u64 << (index % WORD_BITS);
    }

    /// In-place addition (XOR).
    pub fn add_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Dot product over F₂.
    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones % 2 == 1
    }

    /// Positions of the nonzero entries in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w_idx, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w_idx * WORD_BITS + bit)
            })
        })
    }

    /// Lowest index with a nonzero entry.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(idx, &w)| idx * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// The entries as 0/1 bytes.
    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|idx| u8::from(self.get(idx))).collect()
    }

    /// Copies `len` entries starting at `start`.
    pub fn slice(&self, start: usize, len: usize) -> F2Vector {
        assert!(start + len <= self.len, "slice out of range");
        F2Vector::from_ones(len, self.ones().filter(|&i| i >= start && i < start + len).map(|i| i - start))
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        F2Vector::from_ones(self.len + other.len, self.ones().chain(other.ones().map(|i| i + self.len)))
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector[")?;
        for idx in 0..self.len {
            write!(f, "{}", u8::from(self.get(idx)))?;
        }
        write!(f, "]")
    }
}
