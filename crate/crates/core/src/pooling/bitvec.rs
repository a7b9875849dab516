use std::fmt;

/// Fixed-length binary fingerprint.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `(|a ∧ b|, |a ∨ b|)`.
    pub fn and_or_counts(&self, other: &BitVector) -> (u32, u32) {
        assert_eq!(self.len, other.len, "bit vectors differ in length");
        self.words
            .iter()
            .zip(&other.words)
            .fold((0, 0), |(i, u), (a, b)| (i + (a & b).count_ones(), u + (a | b).count_ones()))
    }

    /// Jaccard distance; 0 when both vectors are all-zero.
    pub fn tanimoto_distance(&self, other: &BitVector) -> f64 {
        let (i, u) = self.and_or_counts(other);
        if u == 0 {
            0.0
        } else {
            1.0 - i as f64 / u as f64
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVector({s})")
    }
}
