//! Finite-dimensional modules presented by one matrix per algebra generator.

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::scalar::{Field, Ring};
use super::sparse::{self, normalize_row, Echelon};
use crate::error::{Error, Result};

/// A module given by square matrices (acting on column vectors), one per
/// generator, all of size `dim`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Ring")]
pub struct MatrixRep<F> {
    dim: usize,
    generators: Vec<Matrix<F>>,
}

/// A quotient module together with the projection onto it.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub rep: MatrixRep<F>,
    /// `rep.dim() × parent.dim()` projection.
    pub projection: Matrix<F>,
    /// Coordinates of the parent that survive as the quotient basis.
    pub kept: Vec<usize>,
}

impl<F: Field> MatrixRep<F> {
    pub fn new(dim: usize, generators: Vec<Matrix<F>>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Shape(format!(
                    "generator {i} is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(MatrixRep { dim, generators })
    }

    /// The zero module with `count` generators.
    pub fn zero(count: usize) -> Self {
        MatrixRep { dim: 0, generators: vec![Matrix::zeros(0, 0); count] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Generator matrix, 0-based.
    pub fn generator(&self, i: usize) -> &Matrix<F> {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.generators
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_gens(other)?;
        let gens = self.generators.iter().zip(&other.generators).map(|(a, b)| a.block_diag(b)).collect();
        Ok(MatrixRep { dim: self.dim + other.dim, generators: gens })
    }

    /// Keep only the listed generators, in the listed order.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        MatrixRep { dim: self.dim, generators: keep.iter().map(|&i| self.generators[i].clone()).collect() }
    }

    /// Conjugate by an invertible change of basis: new generators `P⁻¹ X P`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self> {
        let inv = p.inverse().ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
        let gens = self
            .generators
            .iter()
            .map(|g| inv.mul(g)?.mul(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixRep { dim: self.dim, generators: gens })
    }

    fn check_gens(&self, other: &Self) -> Result<()> {
        if self.num_generators() != other.num_generators() {
            return Err(Error::GeneratorCount { left: self.num_generators(), right: other.num_generators() });
        }
        Ok(())
    }

    /// Whether `t` (of shape `target.dim × self.dim`) commutes with every generator.
    pub fn is_intertwiner(&self, target: &Self, t: &Matrix<F>) -> Result<bool> {
        self.check_gens(target)?;
        if t.rows() != target.dim || t.cols() != self.dim {
            return Err(Error::Shape("intertwiner has the wrong shape".into()));
        }
        for (x, y) in self.generators.iter().zip(&target.generators) {
            if t.mul(x)? != y.mul(t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Quotient by the span of `subspace` (need not be independent).
    ///
    /// The quotient basis is the images of the standard basis vectors at the
    /// non-pivot coordinates of the subspace's reduced echelon form.
    pub fn quotient(&self, subspace: &[Vec<F>]) -> Result<Quotient<F>> {
        let (pivots, reduced) = if subspace.is_empty() {
            (Vec::new(), Matrix::zeros(0, self.dim))
        } else {
            let rows = Matrix::from_rows(subspace.to_vec())?;
            if rows.cols() != self.dim {
                return Err(Error::Shape("subspace vectors have the wrong length".into()));
            }
            let rr = rows.rref();
            let k = rr.pivots.len();
            (rr.pivots, rr.reduced.block(0, 0, k, self.dim))
        };
        let mut is_pivot = vec![false; self.dim];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let kept: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![usize::MAX; self.dim];
        for (j, &c) in kept.iter().enumerate() {
            slot[c] = j;
        }
        let mut proj = Matrix::zeros(kept.len(), self.dim);
        for (j, &c) in kept.iter().enumerate() {
            proj.set(j, c, F::one());
        }
        for (r, &p) in pivots.iter().enumerate() {
            for &c in &kept {
                let v = reduced.get(r, c);
                if !v.is_zero() {
                    proj.set(slot[c], p, v.neg());
                }
            }
        }
        let section = Matrix::from_fn(self.dim, kept.len(), |i, j| if kept[j] == i { F::one() } else { F::zero() });
        let mut gens = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let pg = proj.mul(g)?;
            for r in 0..pivots.len() {
                let u = reduced.row(r).to_vec();
                if pg.mul_vec(&u).iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotInvariant { generator: gi, witness: r });
                }
            }
            gens.push(pg.mul(&section)?);
        }
        Ok(Quotient { rep: MatrixRep { dim: kept.len(), generators: gens }, projection: proj, kept })
    }

    /// The action on an invariant subspace, in the coordinates of the given
    /// (linearly independent) basis.
    pub fn subrep(&self, basis: &[Vec<F>]) -> Result<Self> {
        let k = basis.len();
        if k == 0 {
            return Ok(Self::zero(self.num_generators()));
        }
        let b = Matrix::from_columns(self.dim, basis);
        let aug = b.hstack(&Matrix::identity(self.dim))?;
        let rr = aug.rref();
        if rr.pivots.len() < k || rr.pivots[k - 1] != k - 1 {
            return Err(Error::Invalid("subrep basis is not linearly independent".into()));
        }
        let left_inv = rr.reduced.block(0, k, k, self.dim);
        let mut gens = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let gb = g.mul(&b)?;
            let m = left_inv.mul(&gb)?;
            let bm = b.mul(&m)?;
            if let Some(j) = (0..k).find(|&j| bm.column(j) != gb.column(j)) {
                return Err(Error::NotInvariant { generator: gi, witness: j });
            }
            gens.push(m);
        }
        Ok(MatrixRep { dim: k, generators: gens })
    }

    /// Basis of the submodule generated by `seeds`.
    pub fn spin(&self, seeds: &[Vec<F>]) -> Vec<Vec<F>> {
        let mut ech = Echelon::new(self.dim);
        let mut basis: Vec<Vec<F>> = Vec::new();
        let mut queue: Vec<Vec<F>> = seeds.to_vec();
        while let Some(v) = queue.pop() {
            if ech.insert(dense_to_sparse(&v)) {
                for g in &self.generators {
                    queue.push(g.mul_vec(&v));
                }
                basis.push(v);
            }
        }
        basis
    }

    /// Matrix of the action of a word in the generators (applied right to left,
    /// so `word = [i, j]` is `X_i · X_j`).
    pub fn word(&self, word: &[usize]) -> Result<Matrix<F>> {
        let mut acc = Matrix::identity(self.dim);
        for &i in word {
            acc = acc.mul(&self.generators[i])?;
        }
        Ok(acc)
    }
}

pub(crate) fn dense_to_sparse<F: Field>(v: &[F]) -> sparse::SparseRow<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn columns_sparse<F: Field>(m: &Matrix<F>) -> Vec<Vec<(usize, F)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for i in 0..m.rows() {
        for (j, v) in m.row(i).iter().enumerate() {
            if !v.is_zero() {
                cols[j].push((i, v.clone()));
            }
        }
    }
    cols
}

fn rows_sparse<F: Field>(m: &Matrix<F>) -> Vec<Vec<(usize, F)>> {
    (0..m.rows()).map(|i| dense_to_sparse(m.row(i))).collect()
}

/// Basis of the space of module maps `X → Y`, i.e. matrices `T`
/// (`dim Y × dim X`) with `T·Xᵢ = Yᵢ·T` for every generator.
pub fn hom_space<F: Field>(x: &MatrixRep<F>, y: &MatrixRep<F>) -> Result<Vec<Matrix<F>>> {
    x.check_gens(y)?;
    let (dx, dy) = (x.dim(), y.dim());
    if dx == 0 || dy == 0 {
        return Ok(Vec::new());
    }
    let mut ech = Echelon::new(dx * dy);
    for (xg, yg) in x.generators().iter().zip(y.generators()) {
        let xcols = columns_sparse(xg);
        let yrows = rows_sparse(yg);
        for r in 0..dy {
            for c in 0..dx {
                let mut row: Vec<(usize, F)> = Vec::with_capacity(xcols[c].len() + yrows[r].len());
                for (k, v) in &xcols[c] {
                    row.push((r * dx + k, v.clone()));
                }
                for (k, w) in &yrows[r] {
                    row.push((k * dx + c, w.neg()));
                }
                let row = normalize_row(row);
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(ech
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(dy, dx, |r, c| v[r * dx + c].clone()))
        .collect())
}

/// Dimension of the space of module maps `X → Y`.
pub fn hom_dim<F: Field>(x: &MatrixRep<F>, y: &MatrixRep<F>) -> Result<usize> {
    Ok(hom_space(x, y)?.len())
}

/// Rescale so that the first nonzero entry (row-major) equals one.
pub fn normalize_first_nonzero<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    for i in 0..m.rows() {
        for v in m.row(i) {
            if !v.is_zero() {
                return m.scale(&v.inv().expect("nonzero"));
            }
        }
    }
    m.clone()
}

/// Search the span of `candidates` for an invertible element. Tries each
/// basis element, then small integer combinations; returns the first
/// invertible one found.
pub fn find_invertible<F: Field>(candidates: &[Matrix<F>]) -> Option<Matrix<F>> {
    let square = candidates.first().is_some_and(Matrix::is_square);
    if !square {
        return None;
    }
    for c in candidates {
        if c.determinant().ok().is_some_and(|d| !d.is_zero()) {
            return Some(c.clone());
        }
    }
    // a generic combination is invertible whenever any element of the span is;
    // coefficients 1, 2, 3, ... avoid accidental cancellation with high probability
    for seed in 1..=8i64 {
        let mut acc = Matrix::zeros(candidates[0].rows(), candidates[0].cols());
        let mut w = 1i64;
        for c in candidates {
            acc = acc.add(&c.scale(&F::from_i64(w))).ok()?;
            w = w * (seed + 1) + 1;
        }
        if acc.determinant().ok().is_some_and(|d| !d.is_zero()) {
            return Some(acc);
        }
    }
    None
}
