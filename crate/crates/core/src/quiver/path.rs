use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An arrow of the straight-line quiver. `A(i)` steps right from vertex
/// `i`, `B(i)` steps left from vertex `i+1`; vertices are `1..=m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Arrow {
    A(usize),
    B(usize),
}

impl Arrow {
    pub fn source(self) -> usize {
        match self {
            Arrow::A(i) => i,
            Arrow::B(i) => i + 1,
        }
    }

    pub fn target(self) -> usize {
        match self {
            Arrow::A(i) => i + 1,
            Arrow::B(i) => i,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arrow::A(i) => write!(f, "a{i}"),
            Arrow::B(i) => write!(f, "b{i}"),
        }
    }
}

/// A path, with arrows listed in the order they are traversed.
/// Displayed right to left, as composition: `b1a1e1` is `a1` then `b1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<Arrow>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { source: vertex, arrows: Vec::new() }
    }

    pub fn new(source: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut at = source;
        for a in &arrows {
            if a.source() != at {
                return Err(Error::Invalid(format!("arrow {a} does not start at vertex {at}")));
            }
            at = a.target();
        }
        Ok(Path { source, arrows })
    }

    pub fn target(&self) -> usize {
        self.arrows.last().map_or(self.source, |a| a.target())
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Extend by one more arrow, if it starts where the path ends.
    pub fn then(&self, a: Arrow) -> Option<Path> {
        (a.source() == self.target()).then(|| {
            let mut arrows = self.arrows.clone();
            arrows.push(a);
            Path { source: self.source, arrows }
        })
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.arrows.iter().rev() {
            write!(f, "{a}")?;
        }
        write!(f, "e{}", self.source)
    }
}

/// The quotient of the path algebra of the straight-line quiver on `m`
/// vertices by the ideal generated by `a_{i+1}a_i`, `b_i b_{i+1}` and
/// `a_i b_i − b_{i+1} a_{i+1}` wherever those arrows exist.
#[derive(Clone, Debug)]
pub struct QuiverAlgebra {
    pub m: usize,
    basis: Vec<Path>,
}

impl QuiverAlgebra {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid("the quiver needs at least one vertex".into()));
        }
        let basis = enumerate_path_basis(m);
        Ok(QuiverAlgebra { m, basis })
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        arrows(self.m)
    }
}

pub fn arrows(m: usize) -> Vec<Arrow> {
    (1..m).map(Arrow::A).chain((1..m).map(Arrow::B)).collect()
}

/// One rewriting step, or `None` if no rule applies. `Some(None)` means the
/// path is zero.
fn rewrite_once(m: usize, p: &Path) -> Option<Option<Path>> {
    let w = &p.arrows;
    for k in 0..w.len().saturating_sub(1) {
        match (w[k], w[k + 1]) {
            // a_{i+1} a_i and b_i b_{i+1}
            (Arrow::A(i), Arrow::A(j)) if j == i + 1 => return Some(None),
            (Arrow::B(j), Arrow::B(i)) if j == i + 1 => return Some(None),
            // a_i b_i -> b_{i+1} a_{i+1}, loops pushed to the right
            (Arrow::B(i), Arrow::A(j)) if i == j && i + 1 < m => {
                let mut arrows = w.clone();
                arrows[k] = Arrow::A(i + 1);
                arrows[k + 1] = Arrow::B(i + 1);
                return Some(Some(Path { source: p.source, arrows }));
            }
            _ => {}
        }
    }
    // a_i b_i a_i and b_i a_i b_i: consequences of the relations once three
    // vertices exist, imposed directly for two vertices
    for k in 0..w.len().saturating_sub(2) {
        if let (Arrow::A(i), Arrow::B(j), Arrow::A(l)) | (Arrow::B(i), Arrow::A(j), Arrow::B(l)) = (w[k], w[k + 1], w[k + 2]) {
            if i == j && j == l {
                return Some(None);
            }
        }
    }
    None
}

/// Normal form of a path, or `None` if it vanishes in the quotient.
pub fn normal_form(m: usize, p: &Path) -> Option<Path> {
    let mut cur = p.clone();
    loop {
        match rewrite_once(m, &cur) {
            None => return Some(cur),
            Some(None) => return None,
            Some(Some(next)) => cur = next,
        }
    }
}

/// The nonzero normal forms, sorted by source, length and arrows.
pub fn enumerate_path_basis(m: usize) -> Vec<Path> {
    let mut found = std::collections::BTreeSet::new();
    let mut frontier: Vec<Path> = (1..=m).map(Path::trivial).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            found.insert(p.clone());
            for a in arrows(m) {
                if let Some(q) = p.then(a).and_then(|q| normal_form(m, &q)) {
                    if !found.contains(&q) {
                        next.push(q);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut basis: Vec<Path> = found.into_iter().collect();
    basis.sort_by(|x, y| (x.source, x.len(), &x.arrows).cmp(&(y.source, y.len(), &y.arrows)));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(enumerate_path_basis(1), vec![Path::trivial(1)]);
        for m in 2..=8 {
            assert_eq!(enumerate_path_basis(m).len(), 4 * m - 2, "m={m}");
        }
    }

    #[test]
    fn loops_are_canonical() {
        let m = 3;
        // a1 b1 e2 is rewritten to b2 a2 e2
        let p = Path::new(2, vec![Arrow::B(1), Arrow::A(1)]).unwrap();
        let q = normal_form(m, &p).unwrap();
        assert_eq!(q.to_string(), "b2a2e2");
        // a2 b2 e3 survives at the last vertex
        let p = Path::new(3, vec![Arrow::B(2), Arrow::A(2)]).unwrap();
        assert_eq!(normal_form(m, &p).unwrap().to_string(), "a2b2e3");
        let p = Path::new(1, vec![Arrow::A(1), Arrow::A(2)]).unwrap();
        assert!(normal_form(m, &p).is_none());
    }

    #[test]
    fn display_is_composition_order() {
        let p = Path::new(1, vec![Arrow::A(1), Arrow::B(1)]).unwrap();
        assert_eq!(p.to_string(), "b1a1e1");
        assert_eq!(p.target(), 1);
        assert!(Path::new(1, vec![Arrow::B(1)]).is_err());
    }
}
