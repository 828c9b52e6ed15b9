//! Braid group images in the standard modules at generic loop value
//! `s + s⁻¹`, their characters, and the Jones polynomial of a closure.
//!
//! Conventions: one variable `s` with `q = t = s²`, `√t = s`.

use serde::Serialize;

use crate::diagram::standard_dim;
use crate::error::{Error, Result};
use crate::linalg::{GaussianRational, Laurent, Matrix, Rational, Ring};
use crate::tl::standard::standard_matrices;

use super::braid::BraidWord;

/// `β = s + s⁻¹`
pub fn generic_loop_value() -> Laurent {
    Laurent::s().add(&Laurent::s_pow(-1))
}

/// `q = s²`
pub fn hecke_parameter() -> Laurent {
    Laurent::s_pow(2)
}

/// `1 + t`
pub fn one_plus_t() -> Laurent {
    Laurent::one().add(&Laurent::s_pow(2))
}

/// Images of the Hecke generators on `W^n_l`: `G_i = s·E_i − 1` and
/// `G_i⁻¹ = q⁻¹(G_i − (q−1))`.
#[derive(Clone, Debug)]
pub struct HeckeRep {
    pub n: usize,
    pub l: usize,
    pub e: Vec<Matrix<Laurent>>,
    pub g: Vec<Matrix<Laurent>>,
    pub g_inv: Vec<Matrix<Laurent>>,
}

impl HeckeRep {
    pub fn new(n: usize, l: usize) -> Result<Self> {
        let e = standard_matrices(n, l, &generic_loop_value())?;
        let dim = standard_dim(n, l);
        let id = Matrix::<Laurent>::identity(dim);
        let q = hecke_parameter();
        let q_inv = Laurent::s_pow(-2);
        let q_minus_one = q.sub(&Laurent::one());
        let mut g = Vec::with_capacity(e.len());
        let mut g_inv = Vec::with_capacity(e.len());
        for ei in &e {
            let gi = ei.scale(&Laurent::s()).sub(&id)?;
            let inv = gi.sub(&id.scale(&q_minus_one))?.scale(&q_inv);
            g.push(gi);
            g_inv.push(inv);
        }
        Ok(HeckeRep { n, l, e, g, g_inv })
    }

    pub fn dim(&self) -> usize {
        standard_dim(self.n, self.l)
    }

    /// Matrix of a single letter.
    pub fn letter(&self, x: i32) -> Result<&Matrix<Laurent>> {
        let i = x.unsigned_abs() as usize;
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: self.n.saturating_sub(1) });
        }
        Ok(if x > 0 { &self.g[i - 1] } else { &self.g_inv[i - 1] })
    }

    /// Product of the letter matrices, leftmost letter leftmost.
    pub fn braid_matrix(&self, w: &BraidWord) -> Result<Matrix<Laurent>> {
        if w.strands() != self.n {
            return Err(Error::Invalid(format!("braid on {} strands acting on {} strands", w.strands(), self.n)));
        }
        let mut m = Matrix::identity(self.dim());
        for &x in w.letters() {
            m = m.mul(self.letter(x)?)?;
        }
        Ok(m)
    }

    pub fn character(&self, w: &BraidWord) -> Result<Laurent> {
        Ok(self.braid_matrix(w)?.trace())
    }
}

/// `braid_matrix(n, l, w)` on `W^n_l`.
pub fn braid_matrix(n: usize, l: usize, w: &BraidWord) -> Result<Matrix<Laurent>> {
    HeckeRep::new(n, l)?.braid_matrix(w)
}

/// All representations `W^n_{n−2k}`, `k = 0..=n/2`, indexed by `k`.
#[derive(Clone, Debug)]
pub struct HeckeFamily {
    pub n: usize,
    pub reps: Vec<HeckeRep>,
}

impl HeckeFamily {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        let reps = (0..=n / 2).map(|k| HeckeRep::new(n, n - 2 * k)).collect::<Result<_>>()?;
        Ok(HeckeFamily { n, reps })
    }

    /// `χ_{(n−k,k)}(w)` for `k = 0..=n/2`.
    pub fn characters(&self, w: &BraidWord) -> Result<Vec<Laurent>> {
        self.reps.iter().map(|r| r.character(w)).collect()
    }

    pub fn jones(&self, w: &BraidWord) -> Result<JonesResult> {
        let chars = self.characters(w)?;
        jones_from_characters(w, chars)
    }
}

/// `χ_{(n−k,k)}(w)`, the trace on `W^n_{n−2k}`.
pub fn character(n: usize, k: usize, w: &BraidWord) -> Result<Laurent> {
    if 2 * k > n {
        return Err(Error::IndexOutOfRange { index: k, min: 0, max: n / 2 });
    }
    HeckeRep::new(n, n - 2 * k)?.character(w)
}

/// `Σ_{i=k}^{n−k} t^i`
pub fn row_weight(n: usize, k: usize) -> Laurent {
    (k..=n - k).fold(Laurent::zero(), |acc, i| acc.add(&Laurent::s_pow(2 * i as i32)))
}

/// Everything computed on the way to the Jones polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct JonesResult {
    pub braid: String,
    pub strands: usize,
    pub writhe: i64,
    pub characters: Vec<String>,
    pub numerator: String,
    /// `V` as a Laurent polynomial in `s = √t`.
    #[serde(skip)]
    pub value: Laurent,
    pub jones: String,
}

/// Divide the weighted character sum by `1 + t` and multiply by
/// `(−1)^{n−1} s^{e−n+1}`.
pub fn jones_from_characters(w: &BraidWord, chars: Vec<Laurent>) -> Result<JonesResult> {
    let n = w.strands();
    let numerator = chars
        .iter()
        .enumerate()
        .fold(Laurent::zero(), |acc, (k, chi)| acc.add(&row_weight(n, k).mul(chi)));
    let quotient = numerator
        .div_exact(&one_plus_t())
        .ok_or_else(|| Error::NotDivisible(format!("numerator {numerator} of braid [{w}] on {n} strands by 1 + s^2")))?;
    let e = w.writhe() as i32;
    let sign = if (n - 1) % 2 == 0 { Rational::one() } else { Rational::integer(-1) };
    let value = quotient.mul(&Laurent::monomial(sign, e - n as i32 + 1));
    Ok(JonesResult {
        braid: w.to_string(),
        strands: n,
        writhe: w.writhe(),
        characters: chars.iter().map(ToString::to_string).collect(),
        numerator: numerator.to_string(),
        jones: value.to_sqrt_t_string(),
        value,
    })
}

pub fn jones_polynomial(w: &BraidWord) -> Result<JonesResult> {
    HeckeFamily::new(w.strands())?.jones(w)
}

/// `Σ_k (−1)^k χ_{(n−k,k)}` evaluated at `s = i`, where `q = −1` and the
/// loop value is zero.
pub fn alternating_sum_at_i(chars: &[Laurent]) -> GaussianRational {
    let i = GaussianRational::i();
    chars.iter().enumerate().fold(GaussianRational::zero(), |acc, (k, chi)| {
        let v = chi.eval(&i).expect("i is invertible");
        if k % 2 == 0 {
            acc.add(&v)
        } else {
            acc.sub(&v)
        }
    })
}

/// `Σ_{i=k}^{n−k} (−1)^i`
pub fn signed_row_sum(n: usize, k: usize) -> i64 {
    (k..=n - k).map(|i| if i % 2 == 0 { 1 } else { -1 }).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn one_by_one_characters() {
        let w = word(2, "1");
        assert_eq!(character(2, 0, &w).unwrap().to_string(), "-1");
        assert_eq!(character(2, 1, &w).unwrap().to_string(), "1*s^2");
        let dims: Vec<String> = (0..=2).map(|k| character(4, k, &word(4, "")).unwrap().to_string()).collect();
        assert_eq!(dims, vec!["1", "3", "2"]);
    }

    #[test]
    fn small_links() {
        assert_eq!(jones_polynomial(&word(2, "1")).unwrap().jones, "1");
        assert_eq!(jones_polynomial(&word(1, "")).unwrap().jones, "1");
        assert_eq!(jones_polynomial(&word(2, "")).unwrap().jones, "-t^(1/2) - t^(-1/2)");
        assert_eq!(jones_polynomial(&word(2, "1,1,1")).unwrap().jones, "-t^4 + t^3 + t");
        assert_eq!(jones_polynomial(&word(2, "-1,-1,-1")).unwrap().jones, "t^-1 + t^-3 - t^-4");
        assert_eq!(jones_polynomial(&word(2, "1,1")).unwrap().jones, "-t^(5/2) - t^(1/2)");
        assert_eq!(jones_polynomial(&word(3, "1,-2,1,-2")).unwrap().jones, "t^2 - t + 1 - t^-1 + t^-2");
    }

    #[test]
    fn inverse_letters() {
        let r = HeckeRep::new(4, 2).unwrap();
        let id = Matrix::identity(r.dim());
        for i in 0..3 {
            assert_eq!(r.g[i].mul(&r.g_inv[i]).unwrap(), id);
        }
    }

    #[test]
    fn identity_small() {
        let fam = HeckeFamily::new(4).unwrap();
        for s in ["", "1", "1,2,-3", "2,2,2,-1"] {
            let chars = fam.characters(&word(4, s)).unwrap();
            assert!(alternating_sum_at_i(&chars).is_zero());
        }
        assert_eq!(signed_row_sum(5, 1), 0);
        assert_eq!(signed_row_sum(4, 1), -1);
    }
}
