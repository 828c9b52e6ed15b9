use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::BitVec;

/// Largest variable count a polynomial can carry (one bit per variable).
pub const MAX_VARS: usize = 64;

/// A polynomial over GF(2) in `z_1..z_n` modulo all squares: a set of
/// squarefree monomials, each a bitmask with bit `i−1` standing for `z_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultilinearPoly {
    n: usize,
    monomials: BTreeSet<u64>,
}

fn factors(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
}

/// Order monomials by their sorted factor lists.
fn monomial_key(mask: u64) -> Vec<usize> {
    factors(mask).collect()
}

impl MultilinearPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        MultilinearPoly { n, monomials: BTreeSet::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0)
    }

    pub fn monomial(n: usize, mask: u64) -> Self {
        let mut p = Self::zero(n);
        p.monomials.insert(mask);
        p
    }

    /// The single variable `z_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: n });
        }
        Ok(Self::monomial(n, 1 << (i - 1)))
    }

    /// `z_1 + … + z_n`.
    pub fn sum_of_vars(n: usize) -> Self {
        let mut p = Self::zero(n);
        for i in 0..n {
            p.monomials.insert(1 << i);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = u64> + '_ {
        self.monomials.iter().copied()
    }

    /// Toggle one monomial (GF(2) addition of a single term).
    pub fn toggle(&mut self, mask: u64) {
        if !self.monomials.remove(&mask) {
            self.monomials.insert(mask);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for &m in &other.monomials {
            self.toggle(m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    /// Product with squares set to zero.
    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero(self.n.max(other.n));
        for &a in &self.monomials {
            for &b in &other.monomials {
                if a & b == 0 {
                    p.toggle(a | b);
                }
            }
        }
        p
    }

    /// Multiplication by `z_1 + … + z_n`.
    pub fn psi(&self) -> Self {
        let mut p = Self::zero(self.n);
        for &s in &self.monomials {
            for i in 0..self.n {
                if s >> i & 1 == 0 {
                    p.toggle(s | 1 << i);
                }
            }
        }
        p
    }

    /// `Π (z_i + z_j)` over the given pairs.
    pub fn product_of_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut p = Self::one(n);
        for &(i, j) in pairs {
            p = p.mul(&Self::var(n, i)?.add(&Self::var(n, j)?));
        }
        Ok(p)
    }

    /// Relabel variables: `z_i ↦ z_{perm[i−1]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut p = Self::zero(self.n);
        for &s in &self.monomials {
            let img = factors(s).fold(0u64, |acc, i| acc | 1 << (perm[i - 1] - 1));
            p.toggle(img);
        }
        p
    }

    /// Every monomial has degree `k`.
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.monomials.iter().all(|m| m.count_ones() as usize == k)
    }

    /// Coefficient vector indexed by the monomial bitmask, length `2^n`.
    pub fn to_bitvec(&self) -> BitVec {
        BitVec::from_indices(1 << self.n, self.monomials.iter().map(|&m| m as usize))
    }

    pub fn from_bitvec(n: usize, v: &BitVec) -> Self {
        let mut p = Self::zero(n);
        for i in v.ones() {
            p.monomials.insert(i as u64);
        }
        p
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<Vec<usize>> = self.monomials.iter().map(|&m| monomial_key(m)).collect();
        terms.sort();
        let text: Vec<String> = terms
            .iter()
            .map(|t| if t.is_empty() { "1".to_string() } else { t.iter().map(|i| format!("z{i}")).collect::<Vec<_>>().join("*") })
            .collect();
        write!(f, "{}", text.join(" + "))
    }
}

impl MultilinearPoly {
    /// Parse the text form with an explicit variable count.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut p = Self::zero(n);
        if s == "0" {
            return Ok(p);
        }
        for term in s.split('+') {
            let term = term.trim();
            let mut mask = 0u64;
            if term != "1" {
                for f in term.split('*') {
                    let i: usize = f
                        .trim()
                        .strip_prefix('z')
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("bad factor '{f}'")))?;
                    if i == 0 || i > n {
                        return Err(Error::IndexOutOfRange { index: i, min: 1, max: n });
                    }
                    let bit = 1u64 << (i - 1);
                    if mask & bit != 0 {
                        // a repeated factor is a square
                        mask = u64::MAX;
                        break;
                    }
                    mask |= bit;
                }
            }
            if mask != u64::MAX {
                p.toggle(mask);
            }
        }
        Ok(p)
    }
}

impl FromStr for MultilinearPoly {
    type Err = Error;

    /// Parse with the variable count taken from the largest index present.
    fn from_str(s: &str) -> Result<Self> {
        let n = s
            .split(|c: char| !c.is_ascii_alphanumeric())
            .filter_map(|f| f.strip_prefix('z')?.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Self::parse(n, s)
    }
}

impl Serialize for MultilinearPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MultilinearPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn psi_small() {
        assert_eq!(MultilinearPoly::one(3).psi().to_string(), "z1 + z2 + z3");
        assert_eq!(MultilinearPoly::var(2, 1).unwrap().psi().to_string(), "z1*z2");
    }

    #[test]
    fn text_form() {
        let p = MultilinearPoly::product_of_pairs(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(p.to_string(), "z1*z3 + z1*z4 + z2*z3 + z2*z4");
        assert_eq!(p.to_string().parse::<MultilinearPoly>().unwrap(), p);
        assert_eq!(MultilinearPoly::zero(3).to_string(), "0");
        assert_eq!(MultilinearPoly::one(3).to_string(), "1");
        assert!(MultilinearPoly::parse(3, "z1*z1").unwrap().is_zero());
        assert!(MultilinearPoly::parse(3, "z4").is_err());
    }

    proptest! {
        #[test]
        fn psi_squares_to_zero(masks in prop::collection::vec(0u64..256, 0..10)) {
            let mut p = MultilinearPoly::zero(8);
            for m in masks {
                p.toggle(m);
            }
            prop_assert!(p.psi().psi().is_zero());
        }

        #[test]
        fn psi_commutes_with_relabeling(masks in prop::collection::vec(0u64..128, 0..8), perm in Just((1..=7).collect::<Vec<usize>>()).prop_shuffle()) {
            let mut p = MultilinearPoly::zero(7);
            for m in masks {
                p.toggle(m);
            }
            prop_assert_eq!(p.permute(&perm).psi(), p.psi().permute(&perm));
        }
    }
}
