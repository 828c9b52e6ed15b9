use std::collections::HashMap;

use crate::diagram::{enumerate_diagrams, enumerate_monic_basis, enumerate_tl_basis, standard_dim, PlanarDiagram};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, MatrixRep, Rational, Ring};

use super::standard::index_of;

/// The module induced from the standard module with `ℓ−1` throughlines on
/// `n−1` strands, realized as the span of `d ⊗ w` modulo the balanced
/// relations `d·e_j ⊗ w = d ⊗ e_j·w`.
#[derive(Clone, Debug)]
pub struct ProjectiveModule {
    pub n: usize,
    pub l: usize,
    /// A representative `(d, w)` for each basis vector.
    representatives: Vec<(PlanarDiagram, PlanarDiagram)>,
    pub rep: MatrixRep<Rational>,
}

/// Union-find over spanning elements, where a class may also be sent to zero.
struct Classes {
    parent: Vec<usize>,
    dead: Vec<bool>,
}

impl Classes {
    fn new(n: usize) -> Self {
        Classes { parent: (0..n).collect(), dead: vec![false; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        self.dead[lo] |= self.dead[hi];
    }

    fn kill(&mut self, a: usize) {
        let r = self.find(a);
        self.dead[r] = true;
    }
}

impl ProjectiveModule {
    pub fn new(n: usize, l: usize) -> Result<Self> {
        if l < 2 || l > n || l % 2 != n % 2 {
            return Err(Error::Parity { n, through: l });
        }
        let tl = enumerate_tl_basis(n);
        let tl_index = index_of(&tl);
        let w = enumerate_monic_basis(n - 1, l - 1)?;
        let w_index = index_of(&w);
        let wd = w.len();
        let id = |di: usize, wi: usize| di * wd + wi;
        let mut classes = Classes::new(tl.len() * wd);

        // balanced relations for the generators of the smaller algebra
        for j in 1..n - 1 {
            let big = PlanarDiagram::generator(n, j)?;
            let small = PlanarDiagram::generator(n - 1, j)?;
            let moved: Vec<Option<usize>> = w
                .iter()
                .map(|x| {
                    let c = small.compose(x)?;
                    Ok((c.loops == 0 && c.diagram.is_monic()).then(|| w_index[&c.diagram]))
                })
                .collect::<Result<_>>()?;
            for (di, d) in tl.iter().enumerate() {
                let c = d.compose(&big)?;
                let left = (c.loops == 0).then(|| tl_index[&c.diagram]);
                for (wi, right) in moved.iter().enumerate() {
                    match (left, right) {
                        (Some(a), Some(b)) => classes.union(id(a, wi), id(di, *b)),
                        (Some(a), None) => classes.kill(id(a, wi)),
                        (None, Some(b)) => classes.kill(id(di, *b)),
                        (None, None) => {}
                    }
                }
            }
        }

        let total = tl.len() * wd;
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut representatives = Vec::new();
        let mut class_of = vec![None; total];
        for (x, entry) in class_of.iter_mut().enumerate() {
            let r = classes.find(x);
            if classes.dead[r] {
                continue;
            }
            let k = *slot.entry(r).or_insert_with(|| {
                representatives.push((tl[x / wd].clone(), w[x % wd].clone()));
                representatives.len() - 1
            });
            *entry = Some(k);
        }
        let dim = representatives.len();

        // induced action of e_1..e_{n-1} by stacking on the left tensor factor
        let mut gens = Vec::with_capacity(n - 1);
        for i in 1..n {
            let e = PlanarDiagram::generator(n, i)?;
            let image: Vec<Option<usize>> = tl
                .iter()
                .map(|d| {
                    let c = e.compose(d)?;
                    Ok((c.loops == 0).then(|| tl_index[&c.diagram]))
                })
                .collect::<Result<_>>()?;
            let mut m = Matrix::zeros(dim, dim);
            let mut target_of_class: Vec<Option<Option<usize>>> = vec![None; dim];
            for x in 0..total {
                let Some(k) = class_of[x] else { continue };
                let (di, wi) = (x / wd, x % wd);
                let t = image[di].and_then(|a| class_of[id(a, wi)]);
                match target_of_class[k] {
                    None => target_of_class[k] = Some(t),
                    Some(prev) if prev != t => {
                        return Err(Error::NotWellDefined { generator: i, witness: x });
                    }
                    _ => {}
                }
            }
            for (k, t) in target_of_class.iter().enumerate() {
                if let Some(Some(r)) = t {
                    m.set(*r, k, Rational::one());
                }
            }
            gens.push(m);
        }
        Ok(ProjectiveModule { n, l, representatives, rep: MatrixRep::new(dim, gens)? })
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn representatives(&self) -> &[(PlanarDiagram, PlanarDiagram)] {
        &self.representatives
    }
}

/// `dim W_{ℓ−2} + dim W_ℓ`, the size predicted by the two-step filtration.
pub fn expected_projective_dim(n: usize, l: usize) -> usize {
    let below = if l >= 2 { standard_dim(n, l - 2) } else { 0 };
    below + standard_dim(n, l)
}

/// Count of `(n, ℓ)` diagrams that are monic or whose only cap joins the two
/// rightmost bottom points.
pub fn diagrammatic_projective_count(n: usize, l: usize) -> usize {
    enumerate_diagrams(n, l)
        .into_iter()
        .filter(|d| {
            let caps = d.caps();
            caps.is_empty() || (caps.len() == 1 && caps[0] == (l - 1, l))
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::standard::check_tl_relations;

    #[test]
    fn dimensions() {
        for n in [2, 3, 4, 5, 6, 7] {
            for l in (2..=n).filter(|l| l % 2 == n % 2) {
                let p = ProjectiveModule::new(n, l).unwrap();
                assert_eq!(p.dim(), expected_projective_dim(n, l), "n={n} l={l}");
                assert_eq!(diagrammatic_projective_count(n, l), p.dim());
                check_tl_relations(p.rep.generators(), &Rational::zero()).unwrap();
            }
        }
        assert_eq!(ProjectiveModule::new(4, 4).unwrap().dim(), 4);
        assert_eq!(ProjectiveModule::new(4, 2).unwrap().dim(), 5);
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(ProjectiveModule::new(4, 0).is_err());
        assert!(ProjectiveModule::new(4, 3).is_err());
    }
}
