//! Rewriting a product of binomials into planar diagrams by resolving
//! crossings between chords, then between chords and free points.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::diagram::{Endpoint, PlanarDiagram};
use crate::error::{Error, Result};

use super::poly::MultilinearPoly;
use super::tableau::TwoRowTableau;

/// Points `1..n` on a line (or circle) with a partial matching by chords.
/// Unmatched points stand for throughlines.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ChordDiagram {
    pub n: usize,
    chords: Vec<(usize, usize)>,
}

impl ChordDiagram {
    pub fn new(n: usize, chords: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![false; n + 1];
        let mut cs = Vec::with_capacity(chords.len());
        for &(a, b) in chords {
            let (a, b) = (a.min(b), a.max(b));
            if a == 0 || b > n || a == b || used[a] || used[b] {
                return Err(Error::Invalid(format!("chord ({a},{b}) is not a valid matching on 1..{n}")));
            }
            used[a] = true;
            used[b] = true;
            cs.push((a, b));
        }
        cs.sort();
        Ok(ChordDiagram { n, chords: cs })
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn free_points(&self) -> Vec<usize> {
        (1..=self.n).filter(|&p| !self.chords.iter().any(|&(a, b)| a == p || b == p)).collect()
    }

    /// Pairs of crossing chords `((c1,c3),(c2,c4))` with `c1 < c2 < c3 < c4`, sorted.
    pub fn chord_crossings(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for (i, &(a, b)) in self.chords.iter().enumerate() {
            for &(c, d) in &self.chords[i + 1..] {
                if a < c && c < b && b < d {
                    out.push(((a, b), (c, d)));
                } else if c < a && a < d && d < b {
                    out.push(((c, d), (a, b)));
                }
            }
        }
        out.sort();
        out
    }

    /// Chords passing over a free point, as `((c1,c3), c2)`, sorted.
    pub fn point_crossings(&self) -> Vec<((usize, usize), usize)> {
        let free = self.free_points();
        let mut out: Vec<_> = self.chords.iter().flat_map(|&(a, b)| free.iter().filter(move |&&p| a < p && p < b).map(move |&p| ((a, b), p))).collect();
        out.sort();
        out
    }

    pub fn crossings(&self) -> usize {
        self.chord_crossings().len() + self.point_crossings().len()
    }

    fn replace(&self, old: &[(usize, usize)], new: &[(usize, usize)]) -> Self {
        let mut cs: Vec<(usize, usize)> = self.chords.iter().copied().filter(|c| !old.contains(c)).collect();
        cs.extend_from_slice(new);
        ChordDiagram::new(self.n, &cs).expect("resolution keeps a matching")
    }

    /// `Π (z_a + z_b)` over the chords.
    pub fn polynomial(&self) -> MultilinearPoly {
        MultilinearPoly::product_of_pairs(self.n, &self.chords).expect("chords are in range")
    }

    /// The monic diagram with these chords as cups and free points as
    /// throughlines. Fails if anything crosses.
    pub fn to_diagram(&self) -> Result<PlanarDiagram> {
        let free = self.free_points();
        let mut pairs: Vec<(Endpoint, Endpoint)> = self.chords.iter().map(|&(a, b)| (Endpoint::Top(a), Endpoint::Top(b))).collect();
        pairs.extend(free.iter().enumerate().map(|(j, &p)| (Endpoint::Top(p), Endpoint::Bottom(j + 1))));
        PlanarDiagram::from_pairs(self.n, free.len(), &pairs)
    }

    pub fn from_diagram(x: &PlanarDiagram) -> Self {
        ChordDiagram { n: x.n_top(), chords: x.cups() }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.chords {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Which identity a rewrite used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RewriteKind {
    /// `(z1+z3)(z2+z4) = (z1+z2)(z3+z4) + (z1+z4)(z2+z3)`.
    ChordChord,
    /// `z1+z3 = (z1+z2) + (z2+z3)` with `z2` a free point.
    ChordPoint,
}

#[derive(Clone, Debug, Serialize)]
pub struct RewriteStep {
    pub kind: RewriteKind,
    pub before: ChordDiagram,
    pub after: [ChordDiagram; 2],
}

/// The planar terms whose polynomials sum to the input, and the rewrites used.
#[derive(Clone, Debug, Serialize)]
pub struct Resolution {
    pub terms: Vec<PlanarDiagram>,
    pub steps: Vec<RewriteStep>,
}

/// Resolve one crossing: the lexicographically smallest chord crossing if
/// any, otherwise the smallest chord passing over a free point.
pub fn rewrite(d: &ChordDiagram) -> Option<RewriteStep> {
    if let Some(&((c1, c3), (c2, c4))) = d.chord_crossings().first() {
        let old = [(c1, c3), (c2, c4)];
        return Some(RewriteStep {
            kind: RewriteKind::ChordChord,
            before: d.clone(),
            after: [d.replace(&old, &[(c1, c2), (c3, c4)]), d.replace(&old, &[(c1, c4), (c2, c3)])],
        });
    }
    let &((c1, c3), c2) = d.point_crossings().first()?;
    Some(RewriteStep {
        kind: RewriteKind::ChordPoint,
        before: d.clone(),
        after: [d.replace(&[(c1, c3)], &[(c1, c2)]), d.replace(&[(c1, c3)], &[(c2, c3)])],
    })
}

/// Expand a chord diagram into planar ones over GF(2). Every rewrite must
/// strictly lower the crossing count of both outputs.
pub fn resolve(start: &ChordDiagram) -> Result<Resolution> {
    let mut pending: BTreeSet<ChordDiagram> = BTreeSet::new();
    let mut done: BTreeSet<ChordDiagram> = BTreeSet::new();
    let mut steps = Vec::new();
    let toggle = |set: &mut BTreeSet<ChordDiagram>, d: ChordDiagram| {
        if !set.remove(&d) {
            set.insert(d);
        }
    };
    toggle(&mut pending, start.clone());
    while let Some(d) = pending.pop_first() {
        let Some(step) = rewrite(&d) else {
            toggle(&mut done, d);
            continue;
        };
        let before = d.crossings();
        for out in &step.after {
            if out.crossings() >= before {
                return Err(Error::Invalid(format!("rewrite of {d} did not lower crossings: {out}")));
            }
            toggle(&mut pending, out.clone());
        }
        steps.push(step);
    }
    let terms = done.iter().map(ChordDiagram::to_diagram).collect::<Result<Vec<_>>>()?;
    Ok(Resolution { terms, steps })
}

/// Resolve the chord diagram of a tableau's columns.
pub fn resolve_to_noncrossing(t: &TwoRowTableau) -> Result<Resolution> {
    resolve(&ChordDiagram::new(t.n(), &t.columns())?)
}

/// `Π (z_i + z_j)` over the cups of a monic diagram.
pub fn g_map(x: &PlanarDiagram) -> Result<MultilinearPoly> {
    if !x.is_monic() {
        return Err(Error::InvalidDiagram(format!("{x} is not monic")));
    }
    MultilinearPoly::product_of_pairs(x.n_top(), &x.cups())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_input_is_kept() {
        let t = TwoRowTableau::new(vec![1, 3, 5], vec![2, 4]).unwrap();
        let r = resolve_to_noncrossing(&t).unwrap();
        assert_eq!(r.terms.len(), 1);
        assert!(r.steps.is_empty());
        assert_eq!(g_map(&r.terms[0]).unwrap(), t.polynomial());
    }

    #[test]
    fn single_crossing() {
        let d = ChordDiagram::new(4, &[(1, 3), (2, 4)]).unwrap();
        let r = resolve(&d).unwrap();
        assert_eq!(r.terms.len(), 2);
        let mut sum = MultilinearPoly::zero(4);
        for x in &r.terms {
            sum.add_assign(&g_map(x).unwrap());
        }
        assert_eq!(sum, d.polynomial());
    }

    #[test]
    fn point_under_chord() {
        let d = ChordDiagram::new(3, &[(1, 3)]).unwrap();
        let r = resolve(&d).unwrap();
        let cups: Vec<_> = r.terms.iter().map(|x| x.cups()).collect();
        assert_eq!(cups, vec![vec![(1, 2)], vec![(2, 3)]]);
    }
}
