//! Dense matrices over an exact [`Ring`], with elimination routines when the
//! entries form a [`Field`].

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Result of Gauss-Jordan elimination: the reduced row echelon form and its
/// pivot columns, in increasing order.
#[derive(Clone, Debug)]
pub struct Rref<R> {
    pub reduced: Matrix<R>,
    pub pivots: Vec<usize>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Multiple of the identity.
    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<R>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<R>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    /// Matrix product `self · rhs`. Zero entries of `self` are skipped, so
    /// products with sparse left factors are cheap.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let unit = a.is_one();
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[i * rhs.cols + j];
                    if unit {
                        *slot = slot.add(b);
                    } else {
                        slot.add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Block diagonal `diag(self, rhs)`.
    pub fn block_diag(&self, rhs: &Self) -> Self {
        let mut m = Self::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        m.put_block(0, 0, self);
        m.put_block(self.rows, self.cols, rhs);
        m
    }

    /// Overwrite the block starting at `(r0, c0)` with `block`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::Shape("hstack row mismatch".into()));
        }
        let mut m = Self::zeros(self.rows, self.cols + rhs.cols);
        m.put_block(0, 0, self);
        m.put_block(0, self.cols, rhs);
        Ok(m)
    }

    pub fn vstack(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.cols {
            return Err(Error::Shape("vstack column mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix { rows: self.rows + rhs.rows, cols: self.cols, data })
    }
}

impl<F: Field> Matrix<F> {
    /// Gauss-Jordan elimination. The pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..m.cols {
                    let v = m.get(r, j).mul(&inv);
                    m.set(r, j, v);
                }
            }
            let pivot_row: Vec<(usize, F)> = (c..m.cols)
                .filter(|&j| !m.get(r, j).is_zero())
                .map(|j| (j, m.get(r, j).clone()))
                .collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let nv = m.get(i, *j).sub(&f.mul(v));
                    m.set(i, *j, nv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{v : self · v = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Rref { reduced, pivots } = self.rref();
        kernel_from_rref(&reduced, &pivots)
    }

    /// Basis of the column space: the original columns at the pivot positions.
    pub fn image_basis(&self) -> Vec<Vec<F>> {
        self.rref().pivots.iter().map(|&j| self.column(j)).collect()
    }

    pub fn determinant(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(F::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let piv = m.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let f = m.get(i, c).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let nv = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, nv);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n)).ok()?;
        let Rref { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(reduced.block(0, n, n, n))
    }

    /// Some `x` with `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let rhs = Self::from_columns(self.rows, &[b.to_vec()]);
        let aug = self.hstack(&rhs).ok()?;
        let Rref { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = reduced.get(r, self.cols).clone();
        }
        Some(x)
    }
}

fn kernel_from_rref<F: Field>(reduced: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let cols = reduced.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = reduced.get(r, f).neg();
            }
            v
        })
        .collect()
}

/// Rank of the span of a list of vectors of common length `dim`.
pub fn span_rank<F: Field>(dim: usize, vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(dim, vectors).rank()
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span<F: Field>(dim: usize, a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let ra = span_rank(dim, a);
    let rb = span_rank(dim, b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    span_rank(dim, &all) == ra
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

/// Serialized as an array of rows, each an array of scalar strings.
impl<R: Ring> Serialize for Matrix<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de, R: Ring> Deserialize<'de> for Matrix<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let parsed = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| x.parse::<R>().map_err(|_| D::Error::custom(format!("bad scalar `{x}`"))))
                    .collect::<std::result::Result<Vec<R>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Matrix::from_rows(parsed).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{Gf2, Rational};
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::integer(v)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn zero_and_identity_ranks() {
        let z = Matrix::<Rational>::zeros(3, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 3);
        for n in 0..6 {
            assert_eq!(Matrix::<Rational>::identity(n).rank(), n);
        }
    }

    #[test]
    fn kernel_and_image() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(Ring::is_zero));
        let img = m.image_basis();
        assert_eq!(img, vec![m.column(0), m.column(1)]);
    }

    #[test]
    fn determinant_inverse_solve() {
        let m = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant().unwrap(), q(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        let x = m.solve(&[q(1), q(2), q(3)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(1), q(2), q(3)]);
        let sing = mat(&[&[1, 1], &[1, 1]]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[q(1), q(0)]).is_none());
        assert_eq!(sing.determinant().unwrap(), q(0));
    }

    #[test]
    fn json_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![Rational::new(1, 2), q(0)],
            vec![q(-3), Rational::new(7, 5)],
        ])
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"[["1/2","0"],["-3","7/5"]]"#);
        let back: Matrix<Rational> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Matrix<Rational>>(r#"[["1"],["2","3"]]"#).is_err());
    }

    #[test]
    fn gf2_elimination() {
        let m = Matrix::from_rows(vec![
            vec![Gf2(true), Gf2(true), Gf2(false)],
            vec![Gf2(false), Gf2(true), Gf2(true)],
            vec![Gf2(true), Gf2(false), Gf2(true)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_fn(r, c, |i, j| Rational::integer(v[i * c + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(6)) {
            let rank = m.rank();
            let ker = m.kernel_basis();
            prop_assert_eq!(rank + ker.len(), m.cols());
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(Ring::is_zero));
            }
            prop_assert_eq!(span_rank(m.cols(), &ker), ker.len());
            prop_assert_eq!(m.transpose().rank(), rank);
            prop_assert_eq!(span_rank(m.rows(), &m.image_basis()), rank);
        }

        #[test]
        fn det_multiplicative(a in proptest::collection::vec(-3i64..=3, 9),
                              b in proptest::collection::vec(-3i64..=3, 9)) {
            let ma = Matrix::from_fn(3, 3, |i, j| q(a[i * 3 + j]));
            let mb = Matrix::from_fn(3, 3, |i, j| q(b[i * 3 + j]));
            let lhs = ma.mul(&mb).unwrap().determinant().unwrap();
            let rhs = ma.determinant().unwrap().mul(&mb.determinant().unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
