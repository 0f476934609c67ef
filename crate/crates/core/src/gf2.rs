//! Dense vectors over GF(2) and Gaussian elimination.

/// A bit vector of fixed length, packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range");
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range");
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn lowest_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank of the span of `rows` over GF(2).
pub fn rank(rows: &[BitVec]) -> usize {
    // pivots[k] has its lowest set bit at a position no other pivot has
    let mut pivots: Vec<(usize, BitVec)> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        while let Some(low) = r.lowest_one() {
            match pivots.iter().find(|(p, _)| *p == low) {
                Some((_, p)) => r.xor_assign(p),
                None => {
                    pivots.push((low, r));
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let a = BitVec::from_ones(3, [0, 1]);
        let b = BitVec::from_ones(3, [1, 2]);
        let c = BitVec::from_ones(3, [0, 2]);
        assert_eq!(rank(&[a.clone(), b.clone()]), 2);
        assert_eq!(rank(&[a, b, c]), 2);
        assert_eq!(rank(&[BitVec::zeros(5)]), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn rank_crosses_word_boundary() {
        let rows: Vec<BitVec> = (0..130).map(|i| BitVec::from_ones(130, [i, (i + 1) % 130])).collect();
        // edges of a 130-cycle: rank 129
        assert_eq!(rank(&rows), 129);
    }
}
