use crate::diagram::{enumerate_monic_basis, PlanarDiagram};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Ring};

/// Pairing of two monic `(n, ℓ)` diagrams: stack the reflection of `x` on
/// top of `y`; the value is one exactly when all `ℓ` strands run through and
/// no loop closes, zero otherwise.
pub fn pairing(x: &PlanarDiagram, y: &PlanarDiagram) -> Result<Rational> {
    let l = x.n_bottom();
    let c = x.reflect().compose(y)?;
    Ok(if c.loops == 0 && c.diagram.num_throughlines() == l { Rational::one() } else { Rational::zero() })
}

/// The symmetric 0/1 Gram matrix of the pairing on the standard module
/// with `ℓ` throughlines. Only defined for `ℓ > 0`.
pub fn gram_matrix(n: usize, l: usize) -> Result<Matrix<Rational>> {
    if l == 0 {
        return Err(Error::Invalid("the pairing is only defined with at least one throughline".into()));
    }
    let basis = enumerate_monic_basis(n, l)?;
    let dim = basis.len();
    let mut g = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let v = pairing(&basis[i], &basis[j])?;
            if !v.is_zero() {
                g.set(i, j, v.clone());
                g.set(j, i, v);
            }
        }
    }
    Ok(g)
}

/// Dimension of the simple head: the rank of the Gram matrix.
pub fn irreducible_dim(n: usize, l: usize) -> Result<usize> {
    Ok(gram_matrix(n, l)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(gram_matrix(2, 2).unwrap().to_rows(), vec![vec![Rational::one()]]);
        assert_eq!(irreducible_dim(4, 2).unwrap(), 2);
        assert_eq!(irreducible_dim(6, 4).unwrap(), 4);
        assert!(gram_matrix(4, 0).is_err());
    }

    #[test]
    fn symmetric() {
        let g = gram_matrix(6, 2).unwrap();
        assert_eq!(g.transpose(), g);
    }
}
