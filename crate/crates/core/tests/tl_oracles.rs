use std::collections::HashMap;

use tlzero::diagram::{enumerate_monic_basis, enumerate_tl_basis, Endpoint, PlanarDiagram};
use tlzero::linalg::{Matrix, Rational, Ring};
use tlzero::tl::projective::expected_projective_dim;
use tlzero::tl::standard::act_on_monic;
use tlzero::tl::{irreducible_dim, ProjectiveModule};

/// Dimension of `TL_n ⊗ W` over the subalgebra on the first `n−1` strands,
/// by dense elimination of the balanced relations.
fn induced_dim(n: usize, l: usize) -> usize {
    let big = enumerate_tl_basis(n);
    let small = enumerate_monic_basis(n - 1, l - 1).unwrap();
    let bi: HashMap<&PlanarDiagram, usize> = big.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let si: HashMap<&PlanarDiagram, usize> = small.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let cols = big.len() * small.len();
    let col = |d: usize, w: usize| d * small.len() + w;
    let mut rows = Vec::new();
    for j in 1..n - 1 {
        let e = PlanarDiagram::generator(n, j).unwrap();
        for (d, x) in big.iter().enumerate() {
            let de = x.compose(&e).unwrap();
            for (w, y) in small.iter().enumerate() {
                let mut row = vec![Rational::zero(); cols];
                if de.loops == 0 {
                    row[col(bi[&de.diagram], w)] = Rational::one();
                }
                if let Some((0, ew)) = act_on_monic(n - 1, j, y).unwrap() {
                    let c = col(d, si[&ew]);
                    row[c] = row[c].sub(&Rational::one());
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows).unwrap().rank() };
    cols - rank
}

#[test]
fn projectives_match_dense_tensor_quotient() {
    for n in [4, 6] {
        for l in (2..=n).step_by(2) {
            let p = ProjectiveModule::new(n, l).unwrap();
            assert_eq!(p.dim(), induced_dim(n, l), "n = {n}, l = {l}");
            assert_eq!(p.dim(), expected_projective_dim(n, l));
        }
    }
}

/// Glue two monic diagrams along their top rows with a hand-rolled
/// union-find; one iff every bottom point of `x` meets a bottom point of `y`
/// and nothing closes up.
fn glued_pairing(x: &PlanarDiagram, y: &PlanarDiagram) -> i64 {
    let (n, l) = (x.n_top(), x.n_bottom());
    // points: top 0..n, x-bottom n..n+l, y-bottom n+l..n+2l
    let idx_x = |e: Endpoint| match e {
        Endpoint::Top(i) => i - 1,
        Endpoint::Bottom(j) => n + j - 1,
    };
    let idx_y = |e: Endpoint| match e {
        Endpoint::Top(i) => i - 1,
        Endpoint::Bottom(j) => n + l + j - 1,
    };
    let mut parent: Vec<usize> = (0..n + 2 * l).collect();
    fn find(p: &mut Vec<usize>, mut a: usize) -> usize {
        while p[a] != a {
            a = p[a];
        }
        a
    }
    let mut edges = 0;
    for (a, b) in x.pairs().into_iter().map(|(a, b)| (idx_x(a), idx_x(b))).chain(y.pairs().into_iter().map(|(a, b)| (idx_y(a), idx_y(b)))) {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return 0;
        }
        parent[ra] = rb;
        edges += 1;
    }
    let _ = edges;
    for j in 0..l {
        let r = find(&mut parent, n + j);
        if !(0..l).any(|k| find(&mut parent, n + l + k) == r) {
            return 0;
        }
    }
    1
}

#[test]
fn gram_radical_by_gluing() {
    for n in 2..=9 {
        for l in (n % 2..=n).step_by(2).filter(|&l| l > 0) {
            let basis = enumerate_monic_basis(n, l).unwrap();
            let g = Matrix::from_fn(basis.len(), basis.len(), |i, j| Rational::integer(glued_pairing(&basis[i], &basis[j])));
            let radical = g.kernel_basis().len();
            assert_eq!(basis.len() - radical, irreducible_dim(n, l).unwrap(), "n = {n}, l = {l}");
        }
    }
    // four strands, two throughlines: a 3-dimensional module with a 1-dimensional radical
    assert_eq!(irreducible_dim(4, 2).unwrap(), 2);
}
