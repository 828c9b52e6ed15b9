use std::collections::HashMap;

use tlzero::linalg::{Matrix, Rational, Ring};
use tlzero::quiver::{enumerate_path_basis, Arrow, QuiverAlgebra};

type Word = Vec<Arrow>;

fn all_arrows(m: usize) -> Vec<Arrow> {
    (1..m).flat_map(|i| [Arrow::A(i), Arrow::B(i)]).collect()
}

/// Composable words of length `d` from each vertex, as (source, word).
fn words(m: usize, d: usize) -> Vec<(usize, Word)> {
    let mut cur: Vec<(usize, Word)> = (1..=m).map(|v| (v, Vec::new())).collect();
    for _ in 0..d {
        let mut next = Vec::new();
        for (s, w) in &cur {
            let at = w.last().map_or(*s, |a| a.target());
            for a in all_arrows(m) {
                if a.source() == at {
                    let mut w2 = w.clone();
                    w2.push(a);
                    next.push((*s, w2));
                }
            }
        }
        cur = next;
    }
    cur
}

/// Defining relations in traversal order, each a list of signed words.
fn relations(m: usize) -> Vec<Vec<(i64, Word)>> {
    let mut rels = Vec::new();
    for i in 1..m.saturating_sub(1) {
        rels.push(vec![(1, vec![Arrow::A(i), Arrow::A(i + 1)])]);
        rels.push(vec![(1, vec![Arrow::B(i + 1), Arrow::B(i)])]);
        rels.push(vec![(1, vec![Arrow::B(i), Arrow::A(i)]), (-1, vec![Arrow::A(i + 1), Arrow::B(i + 1)])]);
    }
    if m == 2 {
        rels.push(vec![(1, vec![Arrow::A(1), Arrow::B(1), Arrow::A(1)])]);
        rels.push(vec![(1, vec![Arrow::B(1), Arrow::A(1), Arrow::B(1)])]);
    }
    rels
}

/// Dimension of the degree-`d` part of the quotient, by vertex pair.
fn graded_quotient(m: usize, d: usize) -> HashMap<(usize, usize), usize> {
    let ws = words(m, d);
    let end = |s: usize, w: &Word| w.last().map_or(s, |a| a.target());
    let index: HashMap<Word, usize> = ws.iter().enumerate().filter(|(_, (_, w))| !w.is_empty()).map(|(i, (_, w))| (w.clone(), i)).collect();
    let mut rows = Vec::new();
    for rel in relations(m) {
        let k = rel[0].1.len();
        if k > d {
            continue;
        }
        let (rs, rt) = (rel[0].1[0].source(), rel[0].1.last().unwrap().target());
        for j in 0..=d - k {
            for (ps, p) in words(m, j) {
                if end(ps, &p) != rs {
                    continue;
                }
                for (_, q) in words(m, d - k - j).into_iter().filter(|(qs, _)| *qs == rt) {
                    let mut row = vec![Rational::zero(); ws.len()];
                    for (c, r) in &rel {
                        let w: Word = p.iter().chain(r).chain(&q).copied().collect();
                        let i = index[&w];
                        row[i] = row[i].add(&Rational::integer(*c));
                    }
                    rows.push(row);
                }
            }
        }
    }
    let mut out = HashMap::new();
    for (s, w) in &ws {
        *out.entry((*s, end(*s, w))).or_insert(0) += 1;
    }
    if !rows.is_empty() {
        // relations are homogeneous in source and target, so split the rank
        for (&(s, t), n) in out.iter_mut() {
            let cols: Vec<usize> = ws.iter().enumerate().filter(|(_, (a, w))| *a == s && end(*a, w) == t).map(|(i, _)| i).collect();
            let sub: Vec<Vec<Rational>> = rows
                .iter()
                .map(|r| cols.iter().map(|&c| r[c].clone()).collect::<Vec<_>>())
                .filter(|r: &Vec<Rational>| r.iter().any(|v| !v.is_zero()))
                .collect();
            if !sub.is_empty() {
                *n -= Matrix::from_rows(sub).unwrap().rank();
            }
        }
    }
    out
}

#[test]
fn graded_dimensions_from_linear_algebra() {
    for m in 2..=6 {
        let mut total = 0;
        let mut per_degree = Vec::new();
        let basis = enumerate_path_basis(m);
        for d in 0..=4 {
            let q = graded_quotient(m, d);
            let dim: usize = q.values().sum();
            per_degree.push(dim);
            total += dim;
            for (&(s, t), &n) in &q {
                let ours = basis.iter().filter(|p| p.len() == d && p.source == s && p.target() == t).count();
                assert_eq!(ours, n, "m = {m}, degree {d}, {s} -> {t}");
            }
        }
        assert_eq!(per_degree, vec![m, 2 * (m - 1), m, 0, 0], "m = {m}");
        assert_eq!(total, 4 * m - 2);
        assert_eq!(QuiverAlgebra::new(m).unwrap().dim(), total);
    }
    assert_eq!(QuiverAlgebra::new(1).unwrap().dim(), 1);
}
