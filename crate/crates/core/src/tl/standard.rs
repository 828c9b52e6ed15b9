use std::collections::HashMap;

use crate::diagram::{enumerate_monic_basis, PlanarDiagram};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, MatrixRep, Rational, Ring};

/// The standard module spanned by monic `(n, ℓ)` diagrams, with the
/// generators acting at loop value zero.
#[derive(Clone, Debug)]
pub struct StandardModule {
    pub n: usize,
    pub l: usize,
    basis: Vec<PlanarDiagram>,
    index: HashMap<PlanarDiagram, usize>,
    pub rep: MatrixRep<Rational>,
}

impl StandardModule {
    pub fn new(n: usize, l: usize) -> Result<Self> {
        let basis = enumerate_monic_basis(n, l)?;
        let index = index_of(&basis);
        let gens = action_matrices(n, &basis, &index, &Rational::zero())?;
        let rep = MatrixRep::new(basis.len(), gens)?;
        Ok(StandardModule { n, l, basis, index, rep })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PlanarDiagram] {
        &self.basis
    }

    pub fn index_of(&self, d: &PlanarDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Coordinate vector of a single basis diagram.
    pub fn unit(&self, d: &PlanarDiagram) -> Result<Vec<Rational>> {
        let i = self.index_of(d).ok_or_else(|| Error::Invalid(format!("{d} is not a basis diagram")))?;
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        Ok(v)
    }

    /// `e_i · x` at loop value zero: the resulting basis diagram, or `None`
    /// when a loop or a cap appears.
    pub fn act(&self, i: usize, x: &PlanarDiagram) -> Result<Option<PlanarDiagram>> {
        act_on_monic(self.n, i, x).map(|r| r.and_then(|(loops, d)| (loops == 0).then_some(d)))
    }
}

pub(crate) fn index_of(basis: &[PlanarDiagram]) -> HashMap<PlanarDiagram, usize> {
    basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect()
}

/// Stack the generator `e_i` on top of `x`. Returns the loop count and the
/// resulting diagram, or `None` if the result has a cap.
pub fn act_on_monic(n: usize, i: usize, x: &PlanarDiagram) -> Result<Option<(usize, PlanarDiagram)>> {
    let c = PlanarDiagram::generator(n, i)?.compose(x)?;
    Ok(c.diagram.is_monic().then_some((c.loops, c.diagram)))
}

/// Generator matrices `E_1..E_{n-1}` on the span of `basis`, with each
/// closed loop contributing a factor `beta`.
pub fn action_matrices<R: Ring>(
    n: usize,
    basis: &[PlanarDiagram],
    index: &HashMap<PlanarDiagram, usize>,
    beta: &R,
) -> Result<Vec<Matrix<R>>> {
    let dim = basis.len();
    (1..n)
        .map(|i| {
            let mut m = Matrix::zeros(dim, dim);
            for (c, x) in basis.iter().enumerate() {
                if let Some((loops, d)) = act_on_monic(n, i, x)? {
                    let coeff = beta.pow(loops as u32);
                    if !coeff.is_zero() {
                        let r = index[&d];
                        m.set(r, c, coeff);
                    }
                }
            }
            Ok(m)
        })
        .collect()
}

/// Standard-module generator matrices for an arbitrary loop value.
pub fn standard_matrices<R: Ring>(n: usize, l: usize, beta: &R) -> Result<Vec<Matrix<R>>> {
    let basis = enumerate_monic_basis(n, l)?;
    let index = index_of(&basis);
    action_matrices(n, &basis, &index, beta)
}

/// Check `E_i² = βE_i`, `E_iE_{i±1}E_i = E_i` and `E_iE_j = E_jE_i` for
/// `|i−j| ≥ 2`. Generators are 0-based in `gens`.
pub fn check_tl_relations<R: Ring>(gens: &[Matrix<R>], beta: &R) -> Result<()> {
    let k = gens.len();
    for i in 0..k {
        let e = &gens[i];
        if e.mul(e)? != e.scale(beta) {
            return Err(Error::Relation(format!("e{}^2 != beta e{}", i + 1, i + 1)));
        }
        for j in 0..k {
            let f = &gens[j];
            if i.abs_diff(j) == 1 && e.mul(f)?.mul(e)? != *e {
                return Err(Error::Relation(format!("e{0} e{1} e{0} != e{0}", i + 1, j + 1)));
            }
            if i.abs_diff(j) >= 2 && e.mul(f)? != f.mul(e)? {
                return Err(Error::Relation(format!("e{} e{} != e{} e{}", i + 1, j + 1, j + 1, i + 1)));
            }
        }
    }
    Ok(())
}

/// Restriction to the subalgebra on the first `n-1` strands: drop the last
/// generator.
pub fn restrict_last<F: Field>(rep: &MatrixRep<F>) -> MatrixRep<F> {
    let k = rep.num_generators();
    let keep: Vec<usize> = (0..k.saturating_sub(1)).collect();
    rep.restrict(&keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> PlanarDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn dims_and_relations() {
        for n in 1..=7 {
            for l in (n % 2..=n).step_by(2) {
                let w = StandardModule::new(n, l).unwrap();
                assert_eq!(w.dim(), crate::diagram::standard_dim(n, l));
                check_tl_relations(w.rep.generators(), &Rational::zero()).unwrap();
            }
        }
    }

    #[test]
    fn generic_loop_value_relations() {
        let beta = Rational::integer(3);
        for l in [0, 2, 4] {
            check_tl_relations(&standard_matrices(4, l, &beta).unwrap(), &beta).unwrap();
        }
    }

    #[test]
    fn top_module_is_killed() {
        let w = StandardModule::new(4, 4).unwrap();
        assert_eq!(w.dim(), 1);
        assert!(w.rep.generators().iter().all(Matrix::is_zero));
    }

    #[test]
    fn six_point_action() {
        let w = StandardModule::new(6, 2).unwrap();
        let x = d("6:2:[t1-b1,t2-b2,t3-t4,t5-t6]");
        assert_eq!(w.act(4, &x).unwrap(), Some(d("6:2:[t1-b1,t2-b2,t3-t6,t4-t5]")));
        assert_eq!(w.act(1, &x).unwrap(), None);
        assert_eq!(w.act(3, &x).unwrap(), None);
    }
}
