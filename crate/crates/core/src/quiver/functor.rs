//! The functor from modules over the diagram algebra at loop value zero to
//! quiver representations, through maps between adjacent projectives.

use crate::error::{Error, Result};
use crate::linalg::rep::normalize_first_nonzero;
use crate::linalg::{hom_space, Field, Matrix, MatrixRep, Rational, Ring};
use crate::tl::checks::TlFamily;

use super::path::{Arrow, Path};
use super::rep::QuiverRep;

/// The projectives `P_2, P_4, …, P_n` with the maps `ω_ℓ: P_ℓ → P_{ℓ+2}`
/// and `γ_ℓ: P_{ℓ+2} → P_ℓ`. Each spans a one-dimensional hom space and is
/// scaled so that its first nonzero entry is 1; the `γ` are then rescaled
/// so that `ω_ℓ∘γ_ℓ = γ_{ℓ+2}∘ω_{ℓ+2}` exactly.
pub struct AdjacentMaps {
    pub n: usize,
    pub m: usize,
    pub family: TlFamily,
    /// `omega[j-1]` is `ω_{2j}`.
    pub omega: Vec<Matrix<Rational>>,
    /// `gamma[j-1]` is `γ_{2j}` after rescaling.
    pub gamma: Vec<Matrix<Rational>>,
    /// The scalars `c` with `ω_ℓ∘γ_ℓ = c·γ_{ℓ+2}∘ω_{ℓ+2}` under the first
    /// normalization, for `ℓ = 2, 4, …, n−4`. `None` if not proportional.
    pub ratios: Vec<Option<Rational>>,
}

fn one_dim_basis(x: &MatrixRep<Rational>, y: &MatrixRep<Rational>, what: &str) -> Result<Matrix<Rational>> {
    let homs = hom_space(x, y)?;
    if homs.len() != 1 {
        return Err(Error::Invalid(format!("{what}: expected a one-dimensional hom space, found {}", homs.len())));
    }
    Ok(normalize_first_nonzero(&homs[0]))
}

/// The `c` with `x = c·y`, if any.
pub fn ratio(x: &Matrix<Rational>, y: &Matrix<Rational>) -> Option<Rational> {
    let k = (0..y.rows()).flat_map(|r| (0..y.cols()).map(move |c| (r, c))).find(|&(r, c)| !y.get(r, c).is_zero())?;
    let c = x.get(k.0, k.1).div(y.get(k.0, k.1))?;
    (y.scale(&c) == *x).then_some(c)
}

impl AdjacentMaps {
    pub fn new(n: usize) -> Result<Self> {
        if n % 2 == 1 || n < 2 {
            return Err(Error::Parity { n, through: 0 });
        }
        let m = n / 2;
        let family = TlFamily::with_projectives(n)?;
        let mut omega = Vec::new();
        let mut gamma = Vec::new();
        for j in 1..m {
            let (lo, hi) = (family.p(2 * j), family.p(2 * j + 2));
            omega.push(one_dim_basis(lo, hi, "omega")?);
            gamma.push(one_dim_basis(hi, lo, "gamma")?);
        }
        let mut ratios = Vec::new();
        for j in 1..m.saturating_sub(1) {
            let left = omega[j - 1].mul(&gamma[j - 1])?;
            let right = gamma[j].mul(&omega[j])?;
            ratios.push(ratio(&left, &right));
        }
        let mut scale = Rational::one();
        for j in 1..m.saturating_sub(1) {
            let c = ratios[j - 1].clone().unwrap_or_else(Rational::one);
            scale = scale.mul(&c);
            gamma[j] = gamma[j].scale(&scale);
        }
        Ok(AdjacentMaps { n, m, family, omega, gamma, ratios })
    }

    /// The projective at quiver vertex `j`, that is `P_{2j}`.
    pub fn projective(&self, j: usize) -> &MatrixRep<Rational> {
        self.family.p(2 * j)
    }

    /// The image of a path as a map `P_{2s} → P_{2t}`: arrows `a_i` go to
    /// `ω_{2i}` and `b_i` to `γ_{2i}`, composed in the order traversed.
    pub fn psi(&self, p: &Path) -> Result<Matrix<Rational>> {
        let mut t = Matrix::identity(self.projective(p.source).dim());
        for a in &p.arrows {
            let g = match *a {
                Arrow::A(i) => &self.omega[i - 1],
                Arrow::B(i) => &self.gamma[i - 1],
            };
            t = g.mul(&t)?;
        }
        Ok(t)
    }

    /// Apply the functor to a module.
    pub fn phi(&self, x: &MatrixRep<Rational>) -> Result<PhiImage> {
        let bases: Vec<Vec<Matrix<Rational>>> = (1..=self.m).map(|j| hom_space(self.projective(j), x)).collect::<Result<_>>()?;
        let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for j in 1..self.m {
            // a_j: f ↦ f∘γ_{2j}, b_j: g ↦ g∘ω_{2j}
            let cols: Vec<Vec<Rational>> =
                bases[j - 1].iter().map(|f| coordinates(&bases[j], &f.mul(&self.gamma[j - 1])?)).collect::<Result<_>>()?;
            a.push(Matrix::from_columns(dims[j], &cols));
            let cols: Vec<Vec<Rational>> =
                bases[j].iter().map(|g| coordinates(&bases[j - 1], &g.mul(&self.omega[j - 1])?)).collect::<Result<_>>()?;
            b.push(Matrix::from_columns(dims[j - 1], &cols));
        }
        Ok(PhiImage { rep: QuiverRep::new(self.m, dims, a, b)?, bases })
    }

    /// The functor on a morphism `t: X → Y`, given the images of `X` and `Y`,
    /// as one matrix per vertex.
    pub fn phi_morphism(&self, x: &PhiImage, y: &PhiImage, t: &Matrix<Rational>) -> Result<Vec<Matrix<Rational>>> {
        (0..self.m)
            .map(|v| {
                let cols: Vec<Vec<Rational>> =
                    x.bases[v].iter().map(|f| coordinates(&y.bases[v], &t.mul(f)?)).collect::<Result<_>>()?;
                Ok(Matrix::from_columns(y.bases[v].len(), &cols))
            })
            .collect()
    }
}

/// A quiver representation together with the hom-space bases it was built on.
pub struct PhiImage {
    pub rep: QuiverRep,
    pub bases: Vec<Vec<Matrix<Rational>>>,
}

fn flatten(t: &Matrix<Rational>) -> Vec<Rational> {
    t.to_rows().into_iter().flatten().collect()
}

/// Coordinates of `t` in the span of `basis`.
pub fn coordinates(basis: &[Matrix<Rational>], t: &Matrix<Rational>) -> Result<Vec<Rational>> {
    if basis.is_empty() {
        return if t.is_zero() { Ok(Vec::new()) } else { Err(Error::Invalid("map outside an empty hom space".into())) };
    }
    let rows = t.rows() * t.cols();
    let cols: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
    Matrix::from_columns(rows, &cols)
        .solve(&flatten(t))
        .ok_or_else(|| Error::Invalid("map outside the hom space".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::rep::{projective, standard};
    use crate::linalg::rep::find_invertible;

    #[test]
    fn n4_maps() {
        let maps = AdjacentMaps::new(4).unwrap();
        assert_eq!(maps.omega.len(), 1);
        assert!(!maps.omega[0].mul(&maps.gamma[0]).unwrap().is_zero());
        assert!(!maps.gamma[0].mul(&maps.omega[0]).unwrap().is_zero());
        let w2 = maps.family.w(2).clone();
        let img = maps.phi(&w2).unwrap();
        img.rep.check_relations().unwrap();
        assert_eq!(img.rep.dims, vec![1, 1]);
        let d = standard(2, 1).unwrap().to_matrix_rep();
        assert!(find_invertible(&hom_space(&d, &img.rep.to_matrix_rep()).unwrap()).is_some());
        for j in 1..=2 {
            let img = maps.phi(maps.projective(j)).unwrap();
            let p = projective(2, j).unwrap().to_matrix_rep();
            assert!(find_invertible(&hom_space(&p, &img.rep.to_matrix_rep()).unwrap()).is_some(), "j={j}");
        }
    }
}
