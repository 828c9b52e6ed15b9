use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, MatrixRep, Rational, Ring};

/// A representation of the straight-line quiver: a space at each vertex and
/// a matrix for each arrow. `a[i-1]` maps vertex `i` to `i+1` and `b[i-1]`
/// maps vertex `i+1` to `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep {
    pub m: usize,
    pub dims: Vec<usize>,
    pub a: Vec<Matrix<Rational>>,
    pub b: Vec<Matrix<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct QuiverRepJson {
    m: usize,
    dims: Vec<usize>,
    arrows: BTreeMap<String, Matrix<Rational>>,
}

impl Serialize for QuiverRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut arrows = BTreeMap::new();
        for i in 1..self.m {
            arrows.insert(format!("a_{i}"), self.a[i - 1].clone());
            arrows.insert(format!("b_{i}"), self.b[i - 1].clone());
        }
        QuiverRepJson { m: self.m, dims: self.dims.clone(), arrows }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuiverRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut j = QuiverRepJson::deserialize(d)?;
        let mut take = |k: String| j.arrows.remove(&k).ok_or_else(|| serde::de::Error::custom(format!("missing arrow {k}")));
        let mut a = Vec::new();
        let mut b = Vec::new();
        for i in 1..j.m {
            a.push(take(format!("a_{i}"))?);
            b.push(take(format!("b_{i}"))?);
        }
        QuiverRep::new(j.m, j.dims, a, b).map_err(serde::de::Error::custom)
    }
}

impl QuiverRep {
    pub fn new(m: usize, dims: Vec<usize>, a: Vec<Matrix<Rational>>, b: Vec<Matrix<Rational>>) -> Result<Self> {
        if dims.len() != m || a.len() + 1 != m.max(1) || b.len() != a.len() {
            return Err(Error::Shape(format!("{m} vertices need {m} dims and {} arrows each way", m.saturating_sub(1))));
        }
        for i in 0..a.len() {
            if (a[i].rows(), a[i].cols()) != (dims[i + 1], dims[i]) || (b[i].rows(), b[i].cols()) != (dims[i], dims[i + 1]) {
                return Err(Error::Shape(format!("arrow {} has the wrong shape", i + 1)));
            }
        }
        Ok(QuiverRep { m, dims, a, b })
    }

    pub fn zero(m: usize) -> Self {
        Self::with_dims(m, vec![0; m])
    }

    fn with_dims(m: usize, dims: Vec<usize>) -> Self {
        let a = (1..m).map(|i| Matrix::zeros(dims[i], dims[i - 1])).collect();
        let b = (1..m).map(|i| Matrix::zeros(dims[i - 1], dims[i])).collect();
        QuiverRep { m, dims, a, b }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Check the defining relations as matrix identities, including the
    /// cubic ones `a_i b_i a_i = 0` and `b_i a_i b_i = 0`.
    pub fn check_relations(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Relation(what));
        for i in 1..self.m {
            let (ai, bi) = (&self.a[i - 1], &self.b[i - 1]);
            if i + 1 < self.m {
                let (an, bn) = (&self.a[i], &self.b[i]);
                if !an.mul(ai)?.is_zero() {
                    return fail(format!("a{}a{i} != 0", i + 1));
                }
                if !bi.mul(bn)?.is_zero() {
                    return fail(format!("b{i}b{} != 0", i + 1));
                }
                if ai.mul(bi)? != bn.mul(an)? {
                    return fail(format!("a{i}b{i} != b{}a{}", i + 1, i + 1));
                }
            }
            if !ai.mul(bi)?.mul(ai)?.is_zero() {
                return fail(format!("a{i}b{i}a{i} != 0"));
            }
            if !bi.mul(ai)?.mul(bi)?.is_zero() {
                return fail(format!("b{i}a{i}b{i} != 0"));
            }
        }
        Ok(())
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for d in &self.dims {
            off.push(off.last().unwrap() + d);
        }
        off
    }

    /// The same module over the algebra, as matrices for the vertex
    /// idempotents `e_1..e_m`, then `a_1..a_{m−1}`, then `b_1..b_{m−1}`.
    pub fn to_matrix_rep(&self) -> MatrixRep<Rational> {
        let off = self.offsets();
        let total = self.total_dim();
        let mut gens = Vec::new();
        for v in 0..self.m {
            let mut e = Matrix::zeros(total, total);
            for k in off[v]..off[v + 1] {
                e.set(k, k, Rational::one());
            }
            gens.push(e);
        }
        for i in 0..self.a.len() {
            let mut g = Matrix::zeros(total, total);
            g.put_block(off[i + 1], off[i], &self.a[i]);
            gens.push(g);
        }
        for i in 0..self.b.len() {
            let mut g = Matrix::zeros(total, total);
            g.put_block(off[i], off[i + 1], &self.b[i]);
            gens.push(g);
        }
        MatrixRep::new(total, gens).expect("square blocks")
    }

    /// Split a morphism of the assembled modules into its vertex components.
    pub fn vertex_blocks(&self, target: &QuiverRep, t: &Matrix<Rational>) -> Vec<Matrix<Rational>> {
        let (so, to) = (self.offsets(), target.offsets());
        (0..self.m).map(|v| t.block(to[v], so[v], target.dims[v], self.dims[v])).collect()
    }
}

fn check_vertex(m: usize, i: usize) -> Result<()> {
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, min: 1, max: m });
    }
    Ok(())
}

fn unit(rows: usize, cols: usize, r: usize, c: usize) -> Matrix<Rational> {
    let mut x = Matrix::zeros(rows, cols);
    x.set(r, c, Rational::one());
    x
}

/// The simple module at vertex `i`.
pub fn simple(m: usize, i: usize) -> Result<QuiverRep> {
    check_vertex(m, i)?;
    let mut dims = vec![0; m];
    dims[i - 1] = 1;
    Ok(QuiverRep::with_dims(m, dims))
}

/// The standard module at vertex `i`: `ℂ` at `i` and `i+1` with `a_i` the
/// identity and `b_i` zero, truncated to `ℂ` at the last vertex.
pub fn standard(m: usize, i: usize) -> Result<QuiverRep> {
    check_vertex(m, i)?;
    let mut dims = vec![0; m];
    dims[i - 1] = 1;
    if i < m {
        dims[i] = 1;
    }
    let mut r = QuiverRep::with_dims(m, dims);
    if i < m {
        r.a[i - 1] = Matrix::identity(1);
    }
    Ok(r)
}

/// The indecomposable projective at vertex `i`: `ℂ, ℂ², ℂ` at `i−1, i, i+1`
/// with `a_{i−1} = ι₂`, `b_{i−1} = π₁`, `a_i = π₁`, `b_i = ι₂`, truncated at
/// the ends. For a single vertex it is `ℂ`.
pub fn projective(m: usize, i: usize) -> Result<QuiverRep> {
    check_vertex(m, i)?;
    if m == 1 {
        return Ok(QuiverRep::with_dims(1, vec![1]));
    }
    let mut dims = vec![0; m];
    dims[i - 1] = 2;
    if i > 1 {
        dims[i - 2] = 1;
    }
    if i < m {
        dims[i] = 1;
    }
    let mut r = QuiverRep::with_dims(m, dims);
    if i > 1 {
        r.a[i - 2] = unit(2, 1, 1, 0);
        r.b[i - 2] = unit(1, 2, 0, 0);
    }
    if i < m {
        r.a[i - 1] = unit(1, 2, 0, 0);
        r.b[i - 1] = unit(2, 1, 1, 0);
    }
    Ok(r)
}

/// The vertex components of the maps `Δ(i−1) → P(i) → Δ(i)`, as
/// `(inclusion, projection)` per vertex.
pub fn projective_ladder(m: usize, i: usize) -> Result<(Vec<Matrix<Rational>>, Vec<Matrix<Rational>>)> {
    if i < 2 || i > m {
        return Err(Error::IndexOutOfRange { index: i, min: 2, max: m });
    }
    let (sub, p, top) = (standard(m, i - 1)?, projective(m, i)?, standard(m, i)?);
    let mut inc: Vec<Matrix<Rational>> = (0..m).map(|v| Matrix::zeros(p.dims[v], sub.dims[v])).collect();
    let mut proj: Vec<Matrix<Rational>> = (0..m).map(|v| Matrix::zeros(top.dims[v], p.dims[v])).collect();
    inc[i - 2] = Matrix::identity(1);
    inc[i - 1] = unit(2, 1, 1, 0);
    proj[i - 1] = unit(1, 2, 0, 0);
    if i < m {
        proj[i] = Matrix::identity(1);
    }
    Ok((inc, proj))
}

/// Assemble vertex components into one block-diagonal matrix.
pub fn assemble(blocks: &[Matrix<Rational>]) -> Matrix<Rational> {
    let rows = blocks.iter().map(|b| b.rows()).sum();
    let cols = blocks.iter().map(|b| b.cols()).sum();
    let mut t = Matrix::zeros(rows, cols);
    let (mut r, mut c) = (0, 0);
    for b in blocks {
        t.put_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hom_dim;

    #[test]
    fn builders_satisfy_relations() {
        for m in 1..=6 {
            for i in 1..=m {
                for r in [simple(m, i).unwrap(), standard(m, i).unwrap(), projective(m, i).unwrap()] {
                    r.check_relations().unwrap();
                }
            }
        }
        assert_eq!(projective(5, 3).unwrap().dims, vec![0, 1, 2, 1, 0]);
        assert_eq!(standard(4, 4).unwrap().dims, vec![0, 0, 0, 1]);
    }

    #[test]
    fn ladder_is_a_pair_of_morphisms() {
        let m = 4;
        for i in 2..=m {
            let (sub, p, top) = (standard(m, i - 1).unwrap(), projective(m, i).unwrap(), standard(m, i).unwrap());
            let (inc, proj) = projective_ladder(m, i).unwrap();
            let (inc, proj) = (assemble(&inc), assemble(&proj));
            assert!(sub.to_matrix_rep().is_intertwiner(&p.to_matrix_rep(), &inc).unwrap());
            assert!(p.to_matrix_rep().is_intertwiner(&top.to_matrix_rep(), &proj).unwrap());
            assert!(proj.mul(&inc).unwrap().is_zero());
            assert_eq!(inc.rank() + proj.rank(), p.total_dim());
        }
    }

    #[test]
    fn projectives_are_hom_representing() {
        // dim hom(P(i), X) = dim X at vertex i
        let m = 4;
        for i in 1..=m {
            let p = projective(m, i).unwrap().to_matrix_rep();
            for j in 1..=m {
                let d = standard(m, j).unwrap();
                assert_eq!(hom_dim(&p, &d.to_matrix_rep()).unwrap(), d.dims[i - 1]);
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let p = projective(3, 2).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"a_1\""));
        let back: QuiverRep = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
