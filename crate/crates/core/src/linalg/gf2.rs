//! Packed GF(2) vectors and row-space elimination.

use std::fmt;

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
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
        assert!(i < self.len, "bit index out of range");
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        if self.get(i) != v {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index out of range");
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVec({s})")
    }
}

/// Row-space basis in echelon form: each stored row has a distinct leading
/// (lowest) one and no other stored row has a one in that column.
#[derive(Clone, Debug)]
pub struct Gf2Span {
    len: usize,
    rows: Vec<BitVec>,
    lead_of: Vec<Option<usize>>,
}

impl Gf2Span {
    pub fn new(len: usize) -> Self {
        Gf2Span { len, rows: Vec::new(), lead_of: vec![None; len] }
    }

    pub fn from_vectors<'a>(len: usize, vs: impl IntoIterator<Item = &'a BitVec>) -> Self {
        let mut s = Self::new(len);
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    /// Reduce `v` against the span.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        let hits: Vec<usize> = v.ones().filter_map(|c| self.lead_of[c]).collect();
        for r in hits {
            v.xor_assign(&self.rows[r]);
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`, returning true if the dimension grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        let v = self.reduce(&v);
        let Some(lead) = v.first_one() else {
            return false;
        };
        for r in self.rows.iter_mut() {
            if r.get(lead) {
                r.xor_assign(&v);
            }
        }
        self.lead_of[lead] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn is_subspace_of(&self, other: &Gf2Span) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Rank of a list of vectors.
pub fn rank(len: usize, vs: &[BitVec]) -> usize {
    Gf2Span::from_vectors(len, vs).dim()
}

/// Basis of `{c : Σ c_i vs[i] = 0}`, as bit vectors of length `vs.len()`.
pub fn relations(len: usize, vs: &[BitVec]) -> Vec<BitVec> {
    // eliminate on the augmented rows [v_i | e_i]
    let k = vs.len();
    let mut span = Gf2Span::new(len + k);
    let mut out = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        let mut aug = BitVec::zeros(len + k);
        for c in v.ones() {
            aug.flip(c);
        }
        aug.flip(len + i);
        let red = span.reduce(&aug);
        if red.first_one().is_some_and(|c| c >= len) {
            out.push(BitVec::from_indices(k, red.ones().map(|c| c - len)));
        } else {
            span.insert(aug);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bit_ops() {
        let mut v = BitVec::zeros(130);
        v.flip(0);
        v.flip(64);
        v.flip(129);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.first_one(), Some(0));
        v.set(0, false);
        assert_eq!(v.first_one(), Some(64));
    }

    proptest! {
        #[test]
        fn rank_matches_dense(rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 10), 0..12)) {
            use crate::linalg::matrix::Matrix;
            use crate::linalg::scalar::Gf2;
            let vs: Vec<BitVec> = rows.iter()
                .map(|r| BitVec::from_indices(10, r.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)))
                .collect();
            let dense = if rows.is_empty() { 0 } else {
                Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&b| Gf2(b)).collect()).collect()).unwrap().rank()
            };
            prop_assert_eq!(rank(10, &vs), dense);
            let rel = relations(10, &vs);
            prop_assert_eq!(rel.len() + dense, vs.len());
            for c in &rel {
                let mut acc = BitVec::zeros(10);
                for i in c.ones() {
                    acc.xor_assign(&vs[i]);
                }
                prop_assert!(acc.is_zero());
            }
        }
    }
}
