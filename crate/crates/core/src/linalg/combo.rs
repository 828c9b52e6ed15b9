use std::collections::BTreeMap;
use std::fmt;

use super::scalar::Ring;

/// Finite formal linear combination of basis keys. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCombo<K: Ord, R> {
    terms: BTreeMap<K, R>,
}

impl<K: Ord + Clone, R: Ring> LinearCombo<K, R> {
    pub fn zero() -> Self {
        LinearCombo { terms: BTreeMap::new() }
    }

    pub fn single(key: K, c: R) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn add_term(&mut self, key: K, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&R::one().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    pub fn coeff(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &R)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Apply a linear map defined on keys.
    pub fn map_linear<K2: Ord + Clone>(&self, f: impl Fn(&K) -> LinearCombo<K2, R>) -> LinearCombo<K2, R> {
        let mut out = LinearCombo::zero();
        for (k, v) in &self.terms {
            for (k2, w) in f(k).terms {
                out.add_term(k2, w.mul(v));
            }
        }
        out
    }

    /// Coordinates against an ordered basis; `None` if some key is missing.
    pub fn to_vector(&self, index: impl Fn(&K) -> Option<usize>, dim: usize) -> Option<Vec<R>> {
        let mut v = vec![R::zero(); dim];
        for (k, c) in &self.terms {
            v[index(k)?] = c.clone();
        }
        Some(v)
    }
}

impl<K: Ord + Clone, R: Ring> FromIterator<(K, R)> for LinearCombo<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + fmt::Display, R: Ring> fmt::Display for LinearCombo<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})*{k}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<K: Ord + fmt::Debug, R: Ring> fmt::Debug for LinearCombo<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::Rational;

    #[test]
    fn zeros_are_dropped() {
        let mut c: LinearCombo<u32, Rational> = LinearCombo::single(1, Rational::integer(2));
        c.add_term(2, Rational::zero());
        assert_eq!(c.len(), 1);
        c.add_term(1, Rational::integer(-2));
        assert!(c.is_zero());
        let a: LinearCombo<u32, Rational> = [(1, Rational::one()), (2, Rational::integer(3))].into_iter().collect();
        assert!(a.sub(&a).is_zero());
        assert!(a.scale(&Rational::zero()).is_zero());
        assert_eq!(a.to_vector(|k| Some(*k as usize), 3).unwrap()[2], Rational::integer(3));
    }
}
