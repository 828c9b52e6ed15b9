//! The alternating cup-insertion maps between neighbouring standard modules
//! and the throughline-appending embedding.

use crate::diagram::{enumerate_monic_basis, PlanarDiagram};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Ring};

use super::standard::index_of;

fn check_even(n: usize, l: usize) -> Result<()> {
    if n % 2 == 1 || l % 2 == 1 || l + 2 > n {
        return Err(Error::Parity { n, through: l });
    }
    Ok(())
}

/// The map from the module with `ℓ+2` throughlines to the one with `ℓ`,
/// sending `x` to `Σ_{i=0}^{ℓ/2} (−1)^i · x·δ_{2i}` where `δ_{2i}` joins
/// bottom points `2i+1, 2i+2` with a cup.
pub fn alternating_cup_map(n: usize, l: usize) -> Result<Matrix<Rational>> {
    check_even(n, l)?;
    let src = enumerate_monic_basis(n, l + 2)?;
    let dst = enumerate_monic_basis(n, l)?;
    let dst_index = index_of(&dst);
    let mut m: Matrix<Rational> = Matrix::zeros(dst.len(), src.len());
    for (c, x) in src.iter().enumerate() {
        for i in 0..=l / 2 {
            let r = x.insert_cup(2 * i)?;
            if r.loops > 0 || !r.diagram.is_monic() {
                continue;
            }
            let row = dst_index[&r.diagram];
            let sign = if i % 2 == 0 { Rational::one() } else { Rational::integer(-1) };
            let v = m.get(row, c).add(&sign);
            m.set(row, c, v);
        }
    }
    Ok(m)
}

/// Terms of the alternating sum applied to one diagram, with their signs.
pub fn alternating_cup_terms(x: &PlanarDiagram) -> Result<Vec<(i64, PlanarDiagram)>> {
    let l = x
        .n_bottom()
        .checked_sub(2)
        .ok_or_else(|| Error::Invalid("need at least two throughlines".into()))?;
    let mut out = Vec::new();
    for i in 0..=l / 2 {
        let r = x.insert_cup(2 * i)?;
        if r.loops == 0 && r.diagram.is_monic() {
            out.push((if i % 2 == 0 { 1 } else { -1 }, r.diagram));
        }
    }
    Ok(out)
}

/// Linear map from the `(n−1, ℓ+1)` module to the `(n, ℓ+2)` module that
/// appends one throughline on the right.
pub fn append_throughline_map(n: usize, l: usize) -> Result<Matrix<Rational>> {
    if n == 0 || l + 2 > n || (n - l) % 2 == 1 {
        return Err(Error::Parity { n, through: l });
    }
    let src = enumerate_monic_basis(n - 1, l + 1)?;
    let dst = enumerate_monic_basis(n, l + 2)?;
    let dst_index = index_of(&dst);
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (c, x) in src.iter().enumerate() {
        m.set(dst_index[&x.append_throughline()], c, Rational::one());
    }
    Ok(m)
}

/// Projection of the `(n, ℓ)` module onto its quotient by the image of the
/// throughline-appending map from `(n−1, ℓ−1)`. The kept coordinates are the
/// diagrams whose last top point lies on a cup.
pub fn bent_quotient_projection(n: usize, l: usize) -> Result<Matrix<Rational>> {
    let basis = enumerate_monic_basis(n, l)?;
    let kept: Vec<usize> = basis
        .iter()
        .enumerate()
        .filter(|(_, d)| d.cups().iter().any(|&(_, j)| j == n))
        .map(|(i, _)| i)
        .collect();
    let mut p = Matrix::zeros(kept.len(), basis.len());
    for (r, &c) in kept.iter().enumerate() {
        p.set(r, c, Rational::one());
    }
    Ok(p)
}

/// Bend the rightmost throughline of an `(n−1, ℓ+1)` diagram around to
/// become a cup ending at top point `n`.
pub fn bend_rightmost(x: &PlanarDiagram) -> Result<PlanarDiagram> {
    let g = x.append_throughline();
    let l = g.n_bottom() - 2;
    let r = g.insert_cup(l)?;
    debug_assert_eq!(r.loops, 0);
    Ok(r.diagram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_summand_at_bottom() {
        let m = alternating_cup_map(4, 0).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        for c in 0..3 {
            assert_eq!(m.column(c).iter().filter(|v| !v.is_zero()).count(), 1);
        }
    }

    #[test]
    fn composite_vanishes() {
        for n in [4, 6, 8] {
            for l in (2..=n - 2).step_by(2) {
                let a = alternating_cup_map(n, l - 2).unwrap();
                let b = alternating_cup_map(n, l).unwrap();
                assert!(a.mul(&b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn embedding_columns_are_units() {
        let g = append_throughline_map(6, 2).unwrap();
        assert_eq!(g.cols(), 4);
        assert_eq!(g.rank(), 4);
        assert_eq!(g.nnz(), 4);
    }
}
