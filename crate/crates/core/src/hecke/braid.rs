use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the braid group on `n` strands. Letter `±i` is `σ_i^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid")]
pub struct BraidWord {
    n: usize,
    word: Vec<i32>,
}

#[derive(Deserialize)]
struct RawBraid {
    n: usize,
    word: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;
    fn try_from(r: RawBraid) -> Result<Self> {
        BraidWord::new(r.n, r.word)
    }
}

impl BraidWord {
    pub fn new(n: usize, word: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for &x in &word {
            let i = x.unsigned_abs() as usize;
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, min: 1, max: n - 1 });
            }
        }
        Ok(BraidWord { n, word })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Comma-separated signed letters, e.g. `1,-2,1`. The empty string is
    /// the identity braid.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|x| x.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter `{x}`"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(n, word)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|x| x.signum() as i64).sum()
    }

    pub fn positive_letters(&self) -> usize {
        self.word.iter().filter(|&&x| x > 0).count()
    }

    pub fn negative_letters(&self) -> usize {
        self.word.iter().filter(|&&x| x < 0).count()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, word: self.word.iter().rev().map(|x| -x).collect() }
    }

    /// `self` followed by `other`, on the same strands.
    pub fn then(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Invalid(format!("braids on {} and {} strands", self.n, other.n)));
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(BraidWord { n: self.n, word })
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate(&self, u: &BraidWord) -> Result<Self> {
        u.then(self)?.then(&u.inverse())
    }

    /// Add a strand and append `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut word = self.word.clone();
        let s = self.n as i32;
        word.push(if positive { s } else { -s });
        BraidWord { n: self.n + 1, word }
    }

    /// A uniformly random word of length at most `max_len`.
    pub fn random<R: Rng + ?Sized>(n: usize, max_len: usize, rng: &mut R) -> Result<Self> {
        if n < 2 {
            return Self::identity(n);
        }
        let len = rng.gen_range(0..=max_len);
        let k = (n - 1) as i32;
        let word = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=k);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        Self::new(n, word)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_and_print() {
        let w = BraidWord::parse(3, "1, -2,1").unwrap();
        assert_eq!(w.to_string(), "1,-2,1");
        assert_eq!(w.writhe(), 1);
        assert_eq!(w.inverse().to_string(), "-1,2,-1");
        assert!(BraidWord::parse(2, "").unwrap().is_empty());
        assert!(BraidWord::parse(2, "2").is_err());
        assert!(BraidWord::parse(2, "0").is_err());
        assert!(BraidWord::parse(2, "x").is_err());
        assert_eq!(w.stabilize(false).to_string(), "1,-2,1,-3");
    }

    #[test]
    fn serde_validates() {
        let w: BraidWord = serde_json::from_str(r#"{"n":3,"word":[1,-2]}"#).unwrap();
        assert_eq!(w.strands(), 3);
        assert!(serde_json::from_str::<BraidWord>(r#"{"n":2,"word":[3]}"#).is_err());
    }

    #[test]
    fn random_is_seeded() {
        let a = BraidWord::random(4, 12, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = BraidWord::random(4, 12, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert!(a.len() <= 12);
    }
}
