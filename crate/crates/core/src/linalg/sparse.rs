//! Nullspace of a sparse homogeneous linear system.
//!
//! Intertwiner spaces are cut out by one equation per (generator, entry)
//! pair, each touching only a handful of unknowns; eliminating them densely
//! would dominate the running time.

use std::collections::HashMap;

use super::scalar::Field;

/// A sparse row: `(column, coefficient)` pairs with strictly increasing
/// columns and no zero coefficients.
pub type SparseRow<F> = Vec<(usize, F)>;

/// Sort, merge duplicate columns and drop zeros.
pub fn normalize_row<F: Field>(mut row: Vec<(usize, F)>) -> SparseRow<F> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow<F> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.add(&v),
            _ => out.push((c, v)),
        }
        if out.last().is_some_and(|(_, v)| v.is_zero()) {
            out.pop();
        }
    }
    out
}

/// `a - f·b` for sparse rows.
fn axpy<F: Field>(a: &[(usize, F)], f: &F, b: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.mul(&b[j].1).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&f.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row-echelon form keyed by leading column. Pivot rows are
/// normalized to leading coefficient one.
pub struct Echelon<F> {
    cols: usize,
    pivots: HashMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Add an equation; returns true if it was independent of the previous ones.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let mut row = row;
        while let Some((lead, coef)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &coef, p),
                None => {
                    let inv = coef.inv().expect("nonzero");
                    if !inv.is_one() {
                        for (_, v) in row.iter_mut() {
                            *v = v.mul(&inv);
                        }
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    /// Basis of the solution space, one vector per free column, listed in
    /// increasing order of the free column. Each basis vector has a one at
    /// its free column and zeros at all other free columns.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains_key(c)).collect();
        let mut pivot_cols: Vec<usize> = self.pivots.keys().copied().collect();
        pivot_cols.sort_unstable_by(|a, b| b.cmp(a));
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.cols];
                x[f] = F::one();
                for &p in &pivot_cols {
                    let mut acc = F::zero();
                    for (c, v) in self.pivots[&p].iter().skip(1) {
                        if !x[*c].is_zero() {
                            acc.add_mul(v, &x[*c]);
                        }
                    }
                    x[p] = acc.neg();
                }
                x
            })
            .collect()
    }
}

/// Nullspace of the system given by `rows` over `cols` unknowns.
pub fn nullspace<F: Field>(cols: usize, rows: impl IntoIterator<Item = SparseRow<F>>) -> Vec<Vec<F>> {
    let mut ech = Echelon::new(cols);
    for r in rows {
        if !r.is_empty() {
            ech.insert(r);
        }
    }
    ech.nullspace()
}
