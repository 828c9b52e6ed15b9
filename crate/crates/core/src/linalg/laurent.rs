//! Laurent polynomials in one formal variable `s` with rational coefficients.

use std::fmt;
use std::str::FromStr;

use super::scalar::{Field, GaussianRational, Rational, Ring};
use crate::error::Error;

/// `Σ coeffs[j] · s^(low + j)`, trimmed so that the first and last
/// coefficients are nonzero. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<Rational>,
}

impl Laurent {
    pub fn from_coeffs(low: i32, coeffs: Vec<Rational>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.trim();
        p
    }

    /// `c · s^k`
    pub fn monomial(c: Rational, k: i32) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    fn trim(&mut self) {
        let end = self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1);
        self.coeffs.truncate(end);
        let start = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if start > 0 {
            self.coeffs.drain(..start);
            self.low += start as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// Lowest exponent with a nonzero coefficient, `None` for zero.
    pub fn low_degree(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn high_degree(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> Rational {
        let j = k - self.low;
        if j < 0 {
            return Rational::zero();
        }
        self.coeffs.get(j as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (self.low + j as i32, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Substitute `s ↦ s^k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out = out.add(&Laurent::monomial(c.clone(), e * k));
        }
        out
    }

    /// True when only even powers of `s` occur.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Evaluate at `s = x` in any field containing the rationals.
    /// Returns `None` if a negative power is needed and `x = 0`.
    pub fn eval<F: Field + From<Rational>>(&self, x: &F) -> Option<F> {
        let mut acc = F::zero();
        if self.coeffs.is_empty() {
            return Some(acc);
        }
        let xinv = if self.low < 0 { Some(x.inv()?) } else { None };
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                x.pow(e as u32)
            } else {
                xinv.as_ref().expect("inverse computed").pow((-e) as u32)
            };
            acc = acc.add(&F::from(c.clone()).mul(&p));
        }
        Some(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent ring.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        let dl = d.low_degree()?;
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        // ordinary polynomial long division on the normalized parts
        let mut rem: Vec<Rational> = self.coeffs.clone();
        let div = &d.coeffs;
        if rem.len() < div.len() {
            return None;
        }
        let lead_inv = div.last().expect("nonzero").inv().expect("nonzero");
        let qlen = rem.len() - div.len() + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for j in (0..qlen).rev() {
            let c = rem[j + div.len() - 1].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (t, dc) in div.iter().enumerate() {
                rem[j + t] = rem[j + t].sub(&c.mul(dc));
            }
            quot[j] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Laurent::from_coeffs(self.low - dl, quot))
    }

    /// Render as a polynomial in `t` where `s = √t`, highest power first,
    /// e.g. `-t^(1/2) - t^(-1/2)` or `t^-4 + t^-3 - t^-1`.
    pub fn to_sqrt_t_string(&self) -> String {
        let terms: Vec<(i32, Rational)> =
            self.terms().map(|(e, c)| (e, c.clone())).collect::<Vec<_>>().into_iter().rev().collect();
        render(&terms, |e| {
            if e % 2 == 0 {
                match e / 2 {
                    0 => None,
                    1 => Some("t".to_string()),
                    k => Some(format!("t^{k}")),
                }
            } else {
                Some(format!("t^({e}/2)"))
            }
        }, false)
    }
}

fn render(terms: &[(i32, Rational)], var: impl Fn(i32) -> Option<String>, star: bool) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let neg = c.signum() < 0;
        let mag = if neg { c.neg() } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match var(*e) {
            None => out.push_str(&mag.to_string()),
            Some(v) if star => out.push_str(&format!("{mag}*{v}")),
            Some(v) if mag.is_one() => out.push_str(&v),
            Some(v) => out.push_str(&format!("{mag}*{v}")),
        }
    }
    out
}

impl Ring for Laurent {
    fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }
    fn from_i64(v: i64) -> Self {
        Self::monomial(Rational::integer(v), 0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let coeffs = (low..=high).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect();
        Self::from_coeffs(low, coeffs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j].add_mul(a, b);
            }
        }
        Self::from_coeffs(self.low + rhs.low, coeffs)
    }
    fn neg(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }
}

impl From<Rational> for Laurent {
    fn from(c: Rational) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<Rational> for GaussianRational {
    fn from(c: Rational) -> Self {
        GaussianRational::new(c, Rational::zero())
    }
}

/// Ascending powers, `c*s^k` terms: `-1*s^-1 + 2 + 1/2*s^3`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i32, Rational)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        let text = render(&terms, |e| (e != 0).then(|| format!("s^{e}")), true);
        f.write_str(&text)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Laurent {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad Laurent polynomial `{text}`"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms, keeping signs that follow `^`
        let mut pieces = Vec::new();
        let mut cur = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        pieces.push(cur);
        let mut out = Laurent::zero();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let (coef, exp) = if let Some((c, e)) = body.split_once("*s^") {
                (c.parse::<Rational>()?, e.parse::<i32>().map_err(|_| bad())?)
            } else if let Some(e) = body.strip_prefix("s^") {
                (Rational::one(), e.parse::<i32>().map_err(|_| bad())?)
            } else if body == "s" {
                (Rational::one(), 1)
            } else if let Some(c) = body.strip_suffix("*s") {
                (c.parse::<Rational>()?, 1)
            } else {
                (body.parse::<Rational>()?, 0)
            };
            let coef = if sign < 0 { coef.neg() } else { coef };
            out = out.add(&Laurent::monomial(coef, exp));
        }
        Ok(out)
    }
}
